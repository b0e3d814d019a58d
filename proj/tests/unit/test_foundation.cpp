#include <gtest/gtest.h>

#include <cmath>

#include "liechains/linalg.hpp"
#include "liechains/sampling.hpp"

using namespace liechains;

namespace {

// Independent oracle: rank by plain Gaussian elimination over Rat with
// first-nonzero pivoting (no fraction-free tricks).
std::size_t naive_rank(MatR m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rat f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rat r = make_rat(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_THROW(make_rat(1, 0), Error);
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(*exact_sqrt(make_rat(9, 4)), make_rat(3, 2));
  EXPECT_FALSE(exact_sqrt(Rat(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rat(-4)).has_value());
  EXPECT_EQ(*exact_sqrt(Rat(0)), 0);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rat("3/6"), make_rat(1, 2));
  EXPECT_EQ(parse_rat("-0.25"), make_rat(-1, 4));
  EXPECT_EQ(parse_rat("+7"), 7);
  EXPECT_EQ(parse_rat("1.5"), make_rat(3, 2));
  EXPECT_THROW(parse_rat("abc"), Error);
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat(""), Error);
}

TEST(Matrix, ShapeErrors) {
  const MatR a(2, 3), b(2, 2);
  EXPECT_THROW(a * a, Error);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a.block(1, 1, 2, 2), Error);
  EXPECT_THROW(MatR(2, 2, {1, 2, 3}), Error);
}

TEST(RankKernel, Identity) {
  const RankKernel rk = rank_kernel(MatR::identity(3));
  EXPECT_EQ(rk.rank, 3u);
  EXPECT_TRUE(rk.kernel_basis.empty());
}

TEST(RankKernel, Zero) {
  const RankKernel rk = rank_kernel(MatR(2, 3));
  EXPECT_EQ(rk.rank, 0u);
  EXPECT_EQ(rk.kernel_basis.size(), 3u);
}

TEST(RankKernel, RankOneExample) {
  const MatR m{{1, 2}, {2, 4}};
  const RankKernel rk = rank_kernel(m);
  EXPECT_EQ(rk.rank, 1u);
  ASSERT_EQ(rk.kernel_basis.size(), 1u);
  const MatR& v = rk.kernel_basis[0];
  // spanned by (-2, 1)
  EXPECT_EQ(v(0, 0), -2 * v(1, 0));
  EXPECT_NE(v(1, 0), 0);
}

TEST(RankKernel, EmptyThrows) { EXPECT_THROW(rank_kernel(MatR()), Error); }

TEST(RankKernel, AgreesWithNaiveEliminationOnRandomMatrices) {
  Sampler rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 12));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 12));
    const auto k = static_cast<std::size_t>(rng.integer(1, 12));
    const MatR m = rng.matrix(rows, k, 4, 5) * rng.matrix(k, cols, 4, 5);
    const RankKernel rk = rank_kernel(m);
    EXPECT_EQ(rk.rank, naive_rank(m));
    EXPECT_EQ(rk.rank + rk.kernel_basis.size(), cols);
    for (const auto& v : rk.kernel_basis) EXPECT_TRUE((m * v).is_zero());
  }
}

TEST(Solve, Identity) {
  const MatR b = MatR::column({make_rat(1, 3), Rat(-2), Rat(5)});
  EXPECT_EQ(*solve_linear(MatR::identity(3), b), b);
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve_linear(MatR{{1, 1}, {1, 1}}, MatR::column({1, 2})).has_value());
}

TEST(Solve, Diagonal) {
  EXPECT_EQ(*solve_linear(MatR{{2, 0}, {0, 3}}, MatR::column({1, 1})), MatR::column({make_rat(1, 2), make_rat(1, 3)}));
}

TEST(Solve, DimensionMismatchThrows) {
  EXPECT_THROW(solve_linear(MatR::identity(2), MatR::column({1, 2, 3})), Error);
}

TEST(Solve, RandomConsistentSystems) {
  Sampler rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 9));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 9));
    const MatR a = rng.matrix(rows, cols);
    const MatR b = a * rng.matrix(cols, 1);
    const auto x = solve_linear(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, b);
  }
}

TEST(Determinant, InverseRoundTrip) {
  Sampler rng(13);
  for (int t = 0; t < 50; ++t) {
    const MatR m = rng.matrix(4, 4);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), Error);
      continue;
    }
    EXPECT_EQ(m * inverse(m), MatR::identity(4));
    EXPECT_EQ(determinant(m) * determinant(inverse(m)), 1);
  }
}

TEST(ExpNilpotent, Zero) { EXPECT_EQ(exp_nilpotent(MatR(3, 3), 1), MatR::identity(3)); }

TEST(ExpNilpotent, StrictlyUpperTwoByTwo) {
  const MatR m{{0, make_rat(5, 7)}, {0, 0}};
  EXPECT_EQ(exp_nilpotent(m, 2), MatR::identity(2) + m);
}

TEST(ExpNilpotent, JordanBlockHasFactorials) {
  MatR m(4, 4);
  m(0, 1) = m(1, 2) = m(2, 3) = 1;
  const MatR e = exp_nilpotent(m, 4);
  EXPECT_EQ(e(0, 3), make_rat(1, 6));
  EXPECT_EQ(e(0, 2), make_rat(1, 2));
}

TEST(ExpNilpotent, NotNilpotentThrowsNamingThePower) {
  try {
    exp_nilpotent(MatR::identity(2), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("m^3"), std::string::npos);
  }
}

TEST(ExpNilpotent, InverseIsExpOfNegative) {
  Sampler rng(14);
  for (int t = 0; t < 50; ++t) {
    MatR m = rng.matrix(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j <= i; ++j) m(i, j) = 0;
    EXPECT_EQ(exp_nilpotent(m, 5) * exp_nilpotent(-m, 5), MatR::identity(5));
  }
}

TEST(ExpFloat, Zero) { EXPECT_EQ(exp_float(MatF(3, 3)), MatF::identity(3)); }

TEST(ExpFloat, DiagonalLog2) {
  const MatF e = exp_float(MatF::diagonal({std::log(2.0), 0.0}));
  EXPECT_LE(max_abs_diff(e, MatF::diagonal({2.0, 1.0})), 1e-12);
}

TEST(ExpFloat, RotationGenerator) {
  const double t = 2.5;
  const MatF e = exp_float(MatF{{0.0, -t}, {t, 0.0}});
  EXPECT_LE(max_abs_diff(e, MatF{{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}}), 1e-12);
}

TEST(ExpFloat, OverflowAndNonFinite) {
  EXPECT_THROW(exp_float(MatF::diagonal({1000.0})), Error);
  EXPECT_THROW(exp_float(MatF::diagonal({std::nan("")})), Error);
}
