#include <gtest/gtest.h>

#include "liechains/sampling.hpp"
#include "liechains/so_contact.hpp"

using namespace liechains;

namespace {

MatR unit(std::size_t n, std::size_t k) {
  MatR v(n, 1);
  v(k, 0) = 1;
  return v;
}

MatR cols(const MatR& a, const MatR& b) { return hstack(a, b); }

}  // namespace

TEST(Signature, Validation) {
  EXPECT_THROW(Signature(0, 0), Error);
  EXPECT_THROW(Signature(-1, 2), Error);
  const Signature s(2, 1);
  EXPECT_EQ(s.n(), 3u);
  EXPECT_EQ(s.dim_algebra(), 21u);
  EXPECT_EQ(so_basis(Signature(2, 2)).size(), 28u);
}

TEST(FormS, SymmetricWithSignature) {
  const Signature s(2, 1);
  const MatR S = form_s(s);
  EXPECT_EQ(S, S.transpose());
  EXPECT_EQ(S * S, MatR::identity(7));
}

TEST(SoElement, BasisMatricesLieInTheAlgebra) {
  for (const Signature s : {Signature(2, 1), Signature(3, 0), Signature(2, 2)}) {
    const MatR S = form_s(s);
    for (const auto& b : so_basis(s)) {
      const MatR m = b.matrix();
      EXPECT_TRUE((m.transpose() * S + S * m).is_zero());
      EXPECT_EQ(SoElement::from_matrix(s, m), b);
    }
  }
}

TEST(SoElement, CoordinatesRoundTripAndBasisIsIndependent) {
  const Signature s(2, 2);
  Sampler rng(3);
  for (int t = 0; t < 20; ++t) {
    const SoElement x = rng.so_element(s);
    EXPECT_EQ(SoElement::from_coordinates(s, x.coordinates()), x);
  }
  // the flattened basis matrices have full rank
  const auto basis = so_basis(s);
  MatR m(64, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const MatR b = basis[k].matrix();
    for (std::size_t i = 0; i < 64; ++i) m(i, k) = b(i / 8, i % 8);
  }
  EXPECT_EQ(rank(m), basis.size());
}

TEST(SoElement, FromMatrixRejectsNonMembers) {
  const Signature s(2, 1);
  EXPECT_THROW(SoElement::from_matrix(s, MatR::identity(7)), Error);
  EXPECT_THROW(SoElement::from_matrix(s, MatR::identity(6)), Error);
  EXPECT_THROW(SoElement::from_g0(s, MatR(2, 2), MatR::identity(3)), Error);
}

TEST(Bracket, Antisymmetric) {
  const Signature s(3, 0);
  Sampler rng(4);
  const SoElement x = rng.so_element(s);
  const SoElement y = rng.so_element(s);
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_EQ(bracket(x, y), Rat(-1) * bracket(y, x));
}

TEST(Bracket, SignatureMismatchThrows) {
  EXPECT_THROW(bracket(SoElement::e(Signature(2, 1)), SoElement::e(Signature(3, 0))), Error);
}

TEST(Bracket, LeviExampleFromCommutator) {
  const Signature s(2, 1);
  const MatR zero = MatR(3, 1);
  const SoElement x = SoElement::from_gm1(s, cols(unit(3, 0), zero));
  const SoElement y = SoElement::from_gm1(s, cols(zero, unit(3, 0)));
  // oracle: multiply the assembled 7x7 matrices by hand
  const MatR c = x.matrix() * y.matrix() - y.matrix() * x.matrix();
  EXPECT_EQ(c(6, 0), -1);  // z J block: row n+3, col 0 holds -z
  EXPECT_EQ(c(5, 1), 1);
  const SoElement b = bracket(x, y);
  EXPECT_EQ(b, SoElement::e(s));
}

TEST(Bracket, EWithTopLandsInDegreeZero) {
  const Signature s(2, 1);
  SoElement top = SoElement::zero(s);
  top.w = 1;
  const SoElement b = bracket(SoElement::e(s), top);
  EXPECT_FALSE(b.is_zero());
  EXPECT_EQ(b, b.grade(0));
}

TEST(BracketGm1, Examples) {
  const Signature s(2, 1);
  const MatR zero = MatR(3, 1);
  EXPECT_EQ(bracket_gm1(s, cols(unit(3, 0), zero), cols(zero, unit(3, 0))), 1);
  EXPECT_EQ(bracket_gm1(s, cols(unit(3, 2), zero), cols(zero, unit(3, 2))), -1);
  const MatR x = cols(unit(3, 1), unit(3, 2));
  EXPECT_EQ(bracket_gm1(s, x, x), 0);
  EXPECT_THROW(bracket_gm1(s, MatR(2, 2), MatR(3, 2)), Error);
}

TEST(BracketGm1, AgreesWithCommutatorOnRandomPairs) {
  for (const Signature s : {Signature(2, 1), Signature(3, 0), Signature(2, 2)}) {
    Sampler rng(5);
    for (int t = 0; t < 200; ++t) {
      const MatR x = rng.matrix(s.n(), 2);
      const MatR y = rng.matrix(s.n(), 2);
      EXPECT_EQ(bracket(SoElement::from_gm1(s, x), SoElement::from_gm1(s, y)), bracket_gm1(s, x, y) * SoElement::e(s));
    }
  }
}

TEST(Equivariance, Examples) {
  const Signature s(3, 0);
  Sampler rng(6);
  const MatR x = rng.matrix(3, 2), y = rng.matrix(3, 2);
  const auto id = equivariance_checks(s, MatR::identity(3), MatR::identity(2), x, y);
  EXPECT_EQ(id.orthogonal, 0);
  EXPECT_EQ(id.determinant, 0);
  EXPECT_EQ(equivariance_checks(s, MatR::identity(3), MatR(2, 2), x, y).determinant, 0);
  EXPECT_THROW(equivariance_checks(s, MatR::identity(3) * Rat(2), MatR::identity(2), x, y), Error);
}

TEST(Equivariance, RandomResidualsVanish) {
  for (const Signature s : {Signature(2, 1), Signature(3, 0), Signature(2, 2)}) {
    Sampler rng(7);
    for (int t = 0; t < 500; ++t) {
      const MatR c = rng.orthogonal_pq(s);
      const MatR a = rng.matrix(2, 2);
      const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2);
      const auto r = equivariance_checks(s, c, a, x, y);
      ASSERT_EQ(r.orthogonal, 0);
      ASSERT_EQ(r.determinant, 0);
    }
  }
}

TEST(Grading, BasisPairsLandInSumDegree) {
  for (const Signature s : {Signature(2, 1), Signature(3, 0), Signature(2, 2)}) {
    const auto basis = so_basis(s);
    const auto deg = so_basis_degrees(s);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const SoElement b = bracket(basis[i], basis[j]);
        const int d = deg[i] + deg[j];
        if (d < -2 || d > 2) EXPECT_TRUE(b.is_zero());
        else EXPECT_EQ(b, b.grade(d));
      }
  }
}

TEST(Grading, NonDegenerateLeviBracket) {
  const Signature s(2, 2);
  for (std::size_t k = 0; k < 8; ++k) {
    MatR x(4, 2);
    x(k % 4, k / 4) = 1;
    bool found = false;
    for (std::size_t l = 0; l < 8; ++l) {
      MatR y(4, 2);
      y(l % 4, l / 4) = 1;
      found = found || bracket_gm1(s, x, y) != 0;
    }
    EXPECT_TRUE(found);
  }
}

TEST(AdG0, Identity) {
  const Signature s(2, 1);
  const G0Element g(s, MatR::identity(2), MatR::identity(3));
  const MatR x{{1, 2}, {3, 4}, {5, 6}};
  const auto [z, y] = ad_g0(g, Rat(7), x);
  EXPECT_EQ(z, 7);
  EXPECT_EQ(y, x);
}

TEST(AdG0, ScalarBAgreesWithConjugation) {
  const Signature s(2, 1);
  const G0Element g(s, MatR::identity(2) * Rat(2), MatR::identity(3));
  SoElement x = SoElement::from_gm1(s, MatR{{1, 2}, {3, 4}, {5, 6}});
  x.z = 8;
  const auto [z, y] = ad_g0(g, x.z, x.X);
  EXPECT_EQ(z, 2);
  EXPECT_EQ(y, x.X * make_rat(1, 2));
  const SoElement conj = adjoint(s, g.matrix(), x);
  EXPECT_EQ(conj.z, z);
  EXPECT_EQ(conj.X, y);
  const auto [z2, y2] = ad_g0(g.negated(), x.z, x.X);
  EXPECT_EQ(z2, z);
  EXPECT_EQ(y2, y);
  EXPECT_EQ(g, g.negated());
}

TEST(AdG0, PreservesBracketUpToDeterminant) {
  const Signature s(2, 2);
  Sampler rng(8);
  for (int t = 0; t < 50; ++t) {
    const G0Element g = rng.g0_element(s);
    const MatR x = rng.matrix(4, 2), y = rng.matrix(4, 2);
    const MatR gx = ad_g0(g, 0, x).second, gy = ad_g0(g, 0, y).second;
    // [Ad g x, Ad g y] = Ad g [x, y] and Ad g scales e by 1/det B
    EXPECT_EQ(bracket_gm1(s, gx, gy), bracket_gm1(s, x, y) / determinant(g.B));
  }
}

TEST(G0Element, Validation) {
  const Signature s(2, 1);
  EXPECT_THROW(G0Element(s, MatR(2, 2), MatR::identity(3)), Error);
  EXPECT_THROW(G0Element(s, MatR::identity(2), MatR::identity(3) * Rat(2)), Error);
}

TEST(QGroup, MatrixIsOrthogonalAndPreservesFiltration) {
  const Signature s(2, 1);
  Sampler rng(9);
  for (int t = 0; t < 30; ++t) {
    const QGroupElement h = rng.q_element(s, false);
    EXPECT_TRUE(in_orthogonal_group(s, h.matrix()));
    const SoElement he = adjoint(s, h.matrix(), SoElement::e(s));
    EXPECT_NE(he.z, 0);
    // g^{-1} is Q-stable: no degree -2 component appears
    EXPECT_EQ(adjoint(s, h.matrix(), SoElement::from_gm1(s, rng.matrix(3, 2))).z, 0);
    EXPECT_EQ(QGroupElement::from_matrix(s, h.matrix()), h);
  }
}

TEST(QGroup, ProductMatchesMatrices) {
  const Signature s(3, 0);
  Sampler rng(10);
  const QGroupElement a = rng.q_element(s, false), b = rng.q_element(s, false);
  EXPECT_EQ((a * b).matrix(), a.matrix() * b.matrix());
  EXPECT_THROW(QGroupElement::from_matrix(s, rng.group_element(s)), Error);
}

TEST(Segre, RankAndRankOneBracket) {
  const Signature s(2, 1);
  const MatR u{{1}, {2}, {3}};
  const MatR f{{4, 5}};
  EXPECT_EQ(segre_rank(u * f), 1u);
  EXPECT_EQ(segre_rank(MatR(3, 2)), 0u);
  EXPECT_EQ(segre_rank(MatR{{1, 0}, {0, 1}, {0, 0}}), 2u);
  // f1 = f2 gives an isotropic subspace
  EXPECT_EQ(rank_one_bracket(s, f, f, u, unit(3, 1)), 0);
  const MatR f1{{1, 0}}, f2{{0, 1}};
  EXPECT_EQ(rank_one_bracket(s, f1, f2, unit(3, 0), unit(3, 0)), 1);
  EXPECT_EQ(rank_one_bracket(s, f1, f2, unit(3, 0), unit(3, 0)), bracket_gm1(s, unit(3, 0) * f1, unit(3, 0) * f2));
}

TEST(Segre, RankOneBracketMatchesLeviBracket) {
  const Signature s(2, 2);
  Sampler rng(11);
  for (int t = 0; t < 100; ++t) {
    const MatR f1 = rng.matrix(1, 2), f2 = rng.matrix(1, 2), u1 = rng.matrix(4, 1), u2 = rng.matrix(4, 1);
    EXPECT_EQ(rank_one_bracket(s, f1, f2, u1, u2), bracket_gm1(s, u1 * f1, u2 * f2));
  }
}
