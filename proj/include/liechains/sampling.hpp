#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "liechains/linalg.hpp"
#include "liechains/matrix.hpp"
#include "liechains/rational.hpp"
#include "liechains/so_contact.hpp"

namespace liechains {

/// Deterministic generator of random exact objects. Every draw goes through
/// one std::mt19937_64, so a seed fixes the whole sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// num / den with |num| <= max_num, 1 <= den <= max_den.
  Rat rational(long max_num = 5, long max_den = 4) {
    const long num = integer(-max_num, max_num);
    const long den = integer(1, max_den);
    return make_rat(num, den);
  }

  Rat nonzero_rational(long max_num = 5, long max_den = 4) {
    for (;;) {
      Rat r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

  MatR matrix(std::size_t rows, std::size_t cols, long max_num = 5, long max_den = 4) {
    MatR m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(max_num, max_den);
    return m;
  }

  MatR nonzero_matrix(std::size_t rows, std::size_t cols, long max_num = 5, long max_den = 4) {
    for (;;) {
      MatR m = matrix(rows, cols, max_num, max_den);
      if (!m.is_zero()) return m;
    }
  }

  /// Random element of so(p,q): Ipq times an antisymmetric matrix.
  MatR so_pq(const Signature& s, long max_num = 5, long max_den = 4) {
    const std::size_t n = s.n();
    MatR a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = rational(max_num, max_den);
        a(j, i) = -a(i, j);
      }
    return ipq(s) * a;
  }

  SoElement so_element(const Signature& s, long max_num = 5, long max_den = 4) {
    std::vector<Rat> c(s.dim_algebra());
    for (auto& x : c) x = rational(max_num, max_den);
    return SoElement::from_coordinates(s, c);
  }

  /// Random element of O(p,q): Cayley transform of a random so(p,q) element,
  /// times a random diagonal sign matrix.
  MatR orthogonal_pq(const Signature& s) {
    const std::size_t n = s.n();
    const MatR id = MatR::identity(n);
    for (;;) {
      const MatR k = so_pq(s, 3, 3);
      if (determinant(id - k) == 0) continue;
      MatR c = inverse(id - k) * (id + k);
      for (std::size_t i = 0; i < n; ++i)
        if (coin())
          for (std::size_t j = 0; j < n; ++j) c(i, j) = -c(i, j);
      return c;
    }
  }

  MatR gl2() {
    for (;;) {
      MatR b = matrix(2, 2);
      if (determinant(b) != 0) return b;
    }
  }

  /// Invertible 2x2 matrix whose |det| is the square of a rational.
  MatR gl2_square_det() {
    const Rat r = nonzero_rational(3, 3);
    const Rat d1 = nonzero_rational(4, 3);
    const Rat sq = r * r;
    const Rat d2 = (coin() ? sq : Rat(-sq)) / d1;
    const MatR lower{{1, 0}, {rational(3, 2), 1}};
    const MatR upper{{1, rational(3, 2)}, {0, 1}};
    MatR b = lower * MatR::diagonal({d1, d2}) * upper;
    if (coin()) b = MatR{{0, 1}, {1, 0}} * b;
    return b;
  }

  QGroupElement q_element(const Signature& s, bool square_det) {
    MatR b = square_det ? gl2_square_det() : gl2();
    MatR c = orthogonal_pq(s);
    Rat w = rational();
    return QGroupElement(s, std::move(b), std::move(c), std::move(w));
  }

  G0Element g0_element(const Signature& s) {
    MatR b = gl2();
    MatR c = orthogonal_pq(s);
    return G0Element(s, std::move(b), std::move(c));
  }

  /// Random element of O(FormS): exp of a g_- element, times exp of a g_+
  /// element, times a G0 element.
  MatR group_element(const Signature& s) {
    SoElement minus = SoElement::zero(s);
    minus.z = rational(2, 2);
    minus.X = matrix(s.n(), 2, 2, 2);
    SoElement plus = SoElement::zero(s);
    plus.w = rational(2, 2);
    plus.U = matrix(2, s.n(), 2, 2);
    const MatR g0 = g0_element(s).matrix();
    return exp_nilpotent(minus.matrix(), 5) * exp_nilpotent(plus.matrix(), 5) * g0;
  }

  /// 2x2 matrix of determinant +-1.
  MatR unimodular2() {
    const MatR lower{{1, 0}, {rational(3, 2), 1}};
    const MatR upper{{1, rational(3, 2)}, {0, 1}};
    const Rat d = nonzero_rational(3, 3);
    const Rat sgn = coin() ? Rat(1) : Rat(-1);
    return lower * MatR::diagonal({d, sgn / d}) * upper;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace liechains
