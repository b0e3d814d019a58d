#include <gtest/gtest.h>

#include "liechains/sampling.hpp"
#include "liechains/split_quat.hpp"

using namespace liechains;

namespace {

SplitQuaternion random_quat(Sampler& rng) {
  const Rat a0 = rng.rational(), a = rng.rational(), b = rng.rational(), c = rng.rational();
  return {a0, a, b, c};
}

}  // namespace

TEST(SplitQuaternion, MultiplicationTable) {
  using Q = SplitQuaternion;
  EXPECT_EQ(quat_mul(Q::i(), Q::i()), Q::one());
  EXPECT_EQ(quat_mul(Q::j(), Q::j()), Q::one());
  EXPECT_EQ(quat_mul(Q::k(), Q::k()), (Q{-1, 0, 0, 0}));
  EXPECT_EQ(quat_mul(Q::i(), Q::j()), Q::k());
  EXPECT_EQ(quat_mul(Q::j(), Q::i()), (Q{0, 0, 0, -1}));
  EXPECT_EQ(quat_mul(Q::j(), Q::k()), (Q{0, -1, 0, 0}));
  EXPECT_EQ(quat_mul(Q::k(), Q::i()), (Q{0, 0, -1, 0}));
}

TEST(SplitQuaternion, Norms) {
  EXPECT_EQ(SplitQuaternion::i().norm2(), -1);
  EXPECT_EQ(SplitQuaternion::j().norm2(), -1);
  EXPECT_EQ(SplitQuaternion::k().norm2(), 1);
  EXPECT_EQ(SplitQuaternion::one().norm2(), 1);
  // I squares to id, so its norm is -1; K squares to -id
  EXPECT_EQ(quat_norm2(1, 0, 0), -1);
  EXPECT_EQ(quat_norm2(0, 0, 1), 1);
}

TEST(SplitQuaternion, ZeroDivisors) {
  const SplitQuaternion p{1, 1, 0, 0};
  const SplitQuaternion q{1, -1, 0, 0};
  EXPECT_EQ(p.norm2(), 0);
  EXPECT_EQ(quat_mul(p, q), (SplitQuaternion{0, 0, 0, 0}));
}

TEST(SplitQuaternion, MatrixRepresentationIsFaithful) {
  Sampler rng(1);
  for (int t = 0; t < 500; ++t) {
    const SplitQuaternion p = random_quat(rng), q = random_quat(rng);
    EXPECT_EQ(to_matrix(quat_mul(p, q)), to_matrix(p) * to_matrix(q));
    EXPECT_EQ(quat_from_matrix(to_matrix(p)), p);
    EXPECT_EQ(determinant(to_matrix(p)), p.norm2());
    EXPECT_EQ(quat_mul(p, q).norm2(), p.norm2() * q.norm2());
    // conjugate gives the norm
    EXPECT_EQ(quat_mul(p, p.conjugate()), (SplitQuaternion{p.norm2(), 0, 0, 0}));
  }
}

TEST(QuatStructure, RelationsSurviveConjugation) {
  EXPECT_TRUE(QuatStructure::standard().satisfies_relations());
  Sampler rng(2);
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(QuatStructure::standard().conjugated(rng.gl2()).satisfies_relations());
  EXPECT_FALSE((QuatStructure{MatR::identity(2), MatR::identity(2), MatR::identity(2)}.satisfies_relations()));
}

TEST(QuatStructure, ImaginaryElementsSquareToMinusNorm) {
  Sampler rng(3);
  const QuatStructure st = QuatStructure::standard();
  for (int t = 0; t < 100; ++t) {
    const Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
    const MatR m = st.element(a, b, c);
    EXPECT_EQ(m * m, MatR::identity(2) * (-quat_norm2(a, b, c)));
  }
}

TEST(RankOneWitness, Examples) {
  const MatR u{{1}, {2}, {-1}};
  const MatR zero(3, 1);
  EXPECT_EQ(*rank_one_witness(hstack(u, zero)), SplitQuaternion::imaginary(1, 0, 0));
  EXPECT_EQ(*rank_one_witness(hstack(u, u)), SplitQuaternion::imaginary(0, 1, 0));
  EXPECT_FALSE(rank_one_witness(MatR{{1, 0}, {0, 1}, {0, 0}}).has_value());
  EXPECT_THROW(rank_one_witness(MatR(3, 2)), Error);
  EXPECT_THROW(rank_one_witness(MatR(3, 3)), Error);
}

TEST(RankOneWitness, RandomRankOneMapsAreFixedByAProductStructure) {
  Sampler rng(4);
  for (int t = 0; t < 1000; ++t) {
    const MatR u = rng.nonzero_matrix(3, 1), f = rng.nonzero_matrix(1, 2);
    const MatR x = u * f;
    const auto q = rank_one_witness(x);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(quat_norm2(q->a, q->b, q->c), -1);
    EXPECT_EQ(act_on_h(q->a, q->b, q->c, x), x);
  }
}

TEST(RankOneWitness, RankTwoHasNoFixingProductStructure) {
  // Oracle: for x of rank two, x A = x forces A = id, which is not imaginary.
  Sampler rng(5);
  for (int t = 0; t < 200; ++t) {
    const MatR x = rng.matrix(4, 2);
    if (rank(x) != 2) continue;
    EXPECT_FALSE(rank_one_witness(x).has_value());
    for (std::size_t c = 0; c < 2; ++c) {
      const auto sol = solve_linear(x, x.col(c));
      ASSERT_TRUE(sol.has_value());
      EXPECT_EQ(*sol, MatR::identity(2).col(c));
    }
  }
}

TEST(RightMult, AgreesWithStacking) {
  Sampler rng(6);
  for (int t = 0; t < 100; ++t) {
    const MatR x = rng.matrix(3, 2), m = rng.matrix(2, 2);
    EXPECT_EQ(right_mult_matrix(m, 3) * stack_columns(x), stack_columns(x * m));
    EXPECT_EQ(unstack_columns(stack_columns(x), 3), x);
  }
}

TEST(LeviCompatibility, ResidualVanishes) {
  for (const Signature s : {Signature(2, 1), Signature(3, 0), Signature(2, 2)}) {
    Sampler rng(7);
    for (int t = 0; t < 500; ++t) {
      const Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
      const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2);
      ASSERT_EQ(levi_compat_residual(s, a, b, c, x, y), 0);
    }
  }
}

TEST(MaxSubspace, Examples) {
  const MaxSubspace w = max_subspace_for_line(MatR::column({0, 1}), 3);
  ASSERT_EQ(w.basis.size(), 3u);
  for (const auto& b : w.basis) {
    EXPECT_EQ(b * MatR::column({0, 1}), MatR(3, 1));
    EXPECT_EQ(rank(b), 1u);
  }
  EXPECT_EQ(w.reflection, SplitQuaternion::imaginary(1, 0, 0));

  const MaxSubspace d = max_subspace_for_line(MatR::column({1, 1}), 2);
  for (const auto& b : d.basis) EXPECT_EQ(b * MatR::column({1, 1}), MatR(2, 1));
  EXPECT_EQ(d.reflection, SplitQuaternion::imaginary(0, -1, 0));
  EXPECT_THROW(max_subspace_for_line(MatR::column({0, 0}), 2), Error);
}

TEST(MaxSubspace, IsIsotropicAndFixedByItsReflection) {
  const Signature s(2, 2);
  Sampler rng(8);
  for (int t = 0; t < 100; ++t) {
    const MatR l = rng.nonzero_matrix(2, 1);
    const MaxSubspace w = max_subspace_for_line(l, s.n());
    const auto& q = w.reflection;
    EXPECT_EQ(quat_norm2(q.a, q.b, q.c), -1);
    for (const auto& x : w.basis) {
      EXPECT_EQ(act_on_h(q.a, q.b, q.c, x), x);
      for (const auto& y : w.basis) EXPECT_EQ(bracket_gm1(s, x, y), 0);
    }
  }
}

TEST(Eigenspaces, SplitEvenly) {
  Sampler rng(9);
  for (const std::size_t n : {3u, 4u}) {
    for (int t = 0; t < 20; ++t) {
      const QuatStructure st = QuatStructure::standard().conjugated(rng.gl2());
      const EigenDecomposition e = eigenspace_decompose(st, n);
      ASSERT_EQ(e.plus.size(), n);
      ASSERT_EQ(e.minus.size(), n);
      for (const auto& x : e.plus) EXPECT_EQ(x * st.i, x);
      for (const auto& x : e.minus) EXPECT_EQ(x * st.i, -x);
      // J swaps the eigenspaces
      for (const auto& x : e.plus) EXPECT_EQ((x * st.j) * st.i, -(x * st.j));
    }
  }
}
