#include <gtest/gtest.h>

#include <set>

#include "liechains/linalg.hpp"
#include "liechains/path_sl.hpp"
#include "liechains/sampling.hpp"

using namespace liechains;

namespace {

SlElement random_sl(std::size_t n, Sampler& rng) {
  MatR m = rng.matrix(2 * n + 2, 2 * n + 2);
  m(0, 0) -= m.trace();
  return SlElement(n, m);
}

// Grading element: ad(H) acts by the degree on each slot.
SlElement grading_element(std::size_t n) {
  const std::size_t size = 2 * n + 2;
  MatR h(size, size);
  h(1, 1) = -1;
  for (std::size_t i = 2; i < size; ++i) h(i, i) = -2;
  const Rat shift = h.trace() / Rat(static_cast<long>(size));
  for (std::size_t i = 0; i < size; ++i) h(i, i) -= shift;
  return SlElement(n, h);
}

}  // namespace

TEST(Slots, LayoutAndDegrees) {
  EXPECT_EQ(slot_of(0, 0), Slot::Zero);
  EXPECT_EQ(slot_of(1, 0), Slot::Minus1E);
  EXPECT_EQ(slot_of(4, 1), Slot::Minus1V);
  EXPECT_EQ(slot_of(3, 0), Slot::Minus2);
  EXPECT_EQ(slot_of(0, 1), Slot::Plus1E);
  EXPECT_EQ(slot_of(1, 5), Slot::Plus1V);
  EXPECT_EQ(slot_of(0, 2), Slot::Plus2);
  EXPECT_EQ(slot_of(5, 3), Slot::Zero);
  std::set<std::string> names;
  for (Slot s : kAllSlots) names.insert(slot_name(s));
  EXPECT_EQ(names.size(), 7u);
}

TEST(Slots, DegreesMatchGradingElement) {
  const std::size_t n = 2;
  const SlElement h = grading_element(n);
  Sampler rng(1);
  const SlElement x = random_sl(n, rng);
  for (int d = -2; d <= 2; ++d) {
    const SlElement xd = grade_project(x, d);
    EXPECT_EQ(sl_bracket(h, xd), Rat(d) * xd);
  }
}

TEST(Slots, ProjectionsSumToIdentity) {
  Sampler rng(2);
  const SlElement x = random_sl(3, rng);
  MatR sum(8, 8);
  for (Slot s : kAllSlots) sum += slot_project_matrix(x.matrix(), s);
  EXPECT_EQ(sum, x.matrix());
  SlElement g(3);
  for (int d = -2; d <= 2; ++d) g = g + grade_project(x, d);
  EXPECT_EQ(g, x);
}

TEST(SlElement, Validation) {
  EXPECT_THROW(SlElement(2, MatR::identity(6)), Error);
  EXPECT_THROW(SlElement(2, MatR(5, 5)), Error);
  EXPECT_THROW(sl_bracket(SlElement(2), SlElement(3)), Error);
}

TEST(SlElement, VectorAccessorsRoundTrip) {
  const MatR v = MatR::column({1, 2, 3, 4});
  EXPECT_EQ(SlElement::from_minus2(v).minus2_vector(), v);
  EXPECT_EQ(SlElement::from_minus1v(v).minus1v_vector(), v);
  EXPECT_EQ(min_degree(SlElement::from_minus2(v).matrix()), -2);
  EXPECT_EQ(min_degree(SlElement::from_minus1v(v).matrix()), -1);
  EXPECT_EQ(min_degree(MatR(6, 6)), 3);
}

TEST(Grading, BracketAddsDegrees) {
  Sampler rng(3);
  for (int t = 0; t < 30; ++t) {
    const SlElement x = random_sl(2, rng), y = random_sl(2, rng);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const SlElement c = sl_bracket(grade_project(x, a), grade_project(y, b));
        if (a + b < -2 || a + b > 2) EXPECT_TRUE(c.is_zero());
        else EXPECT_EQ(c, grade_project(c, a + b));
      }
  }
}

TEST(Jacobi, RandomTriples) {
  Sampler rng(4);
  for (int t = 0; t < 30; ++t) {
    const SlElement x = random_sl(3, rng), y = random_sl(3, rng), z = random_sl(3, rng);
    const SlElement j = sl_bracket(x, sl_bracket(y, z)) + sl_bracket(y, sl_bracket(z, x)) + sl_bracket(z, sl_bracket(x, y));
    EXPECT_TRUE(j.is_zero());
  }
}

TEST(W0, CommutesWithItselfAndMovesMinus2ToMinus1V) {
  for (const std::size_t n : {2u, 3u}) {
    EXPECT_TRUE(sl_bracket(w0(n), w0(n)).is_zero());
    EXPECT_EQ(slot_of(0, 1), Slot::Plus1E);
    Sampler rng(5);
    const MatR v = rng.matrix(2 * n, 1);
    EXPECT_EQ(sl_bracket(w0(n), SlElement::from_minus2(v)), Rat(-1) * SlElement::from_minus1v(v));
    // ad(w0) restricted to g-2 is injective
    MatR ad(2 * n, 2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      MatR e(2 * n, 1);
      e(k, 0) = 1;
      ad.set_block(0, k, sl_bracket(w0(n), SlElement::from_minus2(e)).minus1v_vector());
    }
    EXPECT_EQ(rank(ad), 2 * n);
  }
}

TEST(Parabolic, NonNegativePartIsASubalgebra) {
  Sampler rng(6);
  for (int t = 0; t < 30; ++t) {
    const SlElement x = random_sl(2, rng), y = random_sl(2, rng);
    SlElement px(2), py(2);
    for (int d = 0; d <= 2; ++d) {
      px = px + grade_project(x, d);
      py = py + grade_project(y, d);
    }
    EXPECT_LE(0, min_degree(sl_bracket(px, py).matrix()));
  }
}

TEST(SemisimplePart, DetectionAndQuadrants) {
  MatR m(6, 6);
  m(2, 3) = 1;
  m(4, 5) = 7;
  m(2, 2) = 1;
  m(5, 5) = -1;
  const SlElement x(2, m);
  ASSERT_TRUE(in_g0_semisimple(x));
  const SsPart s = ss_part(x);
  EXPECT_EQ(s.q11(), (MatR{{1, 1}, {0, 0}}));
  EXPECT_EQ(s.q22(), (MatR{{0, 7}, {0, -1}}));
  EXPECT_TRUE(s.q12().is_zero());
  EXPECT_TRUE(s.q21().is_zero());
  EXPECT_FALSE(in_g0_semisimple(w0(2)));
  EXPECT_THROW(ss_part(w0(2)), Error);
  MatR d(6, 6);
  d(0, 0) = 1;
  d(2, 2) = -1;
  EXPECT_FALSE(in_g0_semisimple(SlElement(2, d)));
}

TEST(MinusBasis, DualityUnderTraceForm) {
  const std::size_t n = 3;
  const auto basis = sl_minus_basis(n);
  ASSERT_EQ(basis.size(), 4 * n + 1);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const SlElement e = basis_element(n, basis[a]);
    EXPECT_EQ(slot_of(basis[a].row, basis[a].col), basis[a].slot);
    EXPECT_LT(min_degree(e.matrix()), 0);
    EXPECT_GT(min_degree(dual_element(n, basis[a]).matrix()), 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rat tr = (e.matrix() * dual_element(n, basis[b]).matrix()).trace();
      EXPECT_EQ(tr, a == b ? 1 : 0);
    }
  }
}
