#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liechains/linalg.hpp"
#include "liechains/matrix.hpp"
#include "liechains/rational.hpp"
#include "liechains/so_contact.hpp"

namespace liechains {

/// Split quaternion a0 + a i + b j + c k with i^2 = j^2 = 1, k = ij = -ji.
struct SplitQuaternion {
  Rat a0, a, b, c;

  static SplitQuaternion one() { return {1, 0, 0, 0}; }
  static SplitQuaternion i() { return {0, 1, 0, 0}; }
  static SplitQuaternion j() { return {0, 0, 1, 0}; }
  static SplitQuaternion k() { return {0, 0, 0, 1}; }
  static SplitQuaternion imaginary(const Rat& a, const Rat& b, const Rat& c) { return {0, a, b, c}; }

  /// a0^2 - a^2 - b^2 + c^2; equals det(to_matrix()).
  Rat norm2() const { return a0 * a0 - a * a - b * b + c * c; }

  SplitQuaternion conjugate() const { return {a0, -a, -b, -c}; }

  friend SplitQuaternion operator+(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p.a0 + q.a0, p.a + q.a, p.b + q.b, p.c + q.c};
  }
  friend SplitQuaternion operator-(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p.a0 - q.a0, p.a - q.a, p.b - q.b, p.c - q.c};
  }
  friend bool operator==(const SplitQuaternion& p, const SplitQuaternion& q) {
    return p.a0 == q.a0 && p.a == q.a && p.b == q.b && p.c == q.c;
  }
};

/// Product from the multiplication table (ij = k, jk = -i, ki = -j, k^2 = -1).
inline SplitQuaternion quat_mul(const SplitQuaternion& p, const SplitQuaternion& q) {
  return {p.a0 * q.a0 + p.a * q.a + p.b * q.b - p.c * q.c,
          p.a0 * q.a + p.a * q.a0 - p.b * q.c + p.c * q.b,
          p.a0 * q.b + p.b * q.a0 + p.a * q.c - p.c * q.a,
          p.a0 * q.c + p.c * q.a0 + p.a * q.b - p.b * q.a};
}

/// 1 -> I, i -> diag(1,-1), j -> [[0,1],[1,0]], k -> [[0,1],[-1,0]].
inline MatR to_matrix(const SplitQuaternion& q) {
  return MatR{{q.a0 + q.a, q.b + q.c}, {q.b - q.c, q.a0 - q.a}};
}

inline SplitQuaternion quat_from_matrix(const MatR& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error("quat_from_matrix: need 2x2");
  const Rat half(1, 2);
  return {(m(0, 0) + m(1, 1)) * half, (m(0, 0) - m(1, 1)) * half, (m(0, 1) + m(1, 0)) * half,
          (m(0, 1) - m(1, 0)) * half};
}

/// A split-quaternionic structure on g_{-1} = R^{2*} (x) R^n: three
/// endomorphisms acting by right multiplication with 2x2 matrices i, j, k
/// that satisfy i^2 = j^2 = id, k = ij = -ji.
///
/// The standard structure uses the matrices of `to_matrix`; conjugating all
/// three by some g in GL(2) gives another admissible basis of the same
/// three-dimensional space of endomorphisms.
struct QuatStructure {
  MatR i, j, k;

  static QuatStructure standard() {
    return {to_matrix(SplitQuaternion::i()), to_matrix(SplitQuaternion::j()), to_matrix(SplitQuaternion::k())};
  }

  QuatStructure conjugated(const MatR& g) const {
    const MatR gi = inverse(g);
    return {g * i * gi, g * j * gi, g * k * gi};
  }

  /// a I + b J + c K as a 2x2 right-multiplication matrix.
  MatR element(const Rat& a, const Rat& b, const Rat& c) const { return i * a + j * b + k * c; }

  bool satisfies_relations() const {
    const MatR id = MatR::identity(2);
    return i * i == id && j * j == id && k == i * j && k == -(j * i);
  }
};

/// |A|^2 for A = aI + bJ + cK, defined by A∘A = -|A|^2 id.
inline Rat quat_norm2(const Rat& a, const Rat& b, const Rat& c) { return -a * a - b * b + c * c; }

/// Right multiplication x -> x * (a i + b j + c k).
inline MatR act_on_h(const Rat& a, const Rat& b, const Rat& c, const MatR& x) {
  if (x.cols() != 2) throw Error("act_on_h: expected an n x 2 matrix");
  return x * to_matrix(SplitQuaternion::imaginary(a, b, c));
}

/// Coefficients (a, b, c) of a product structure A = aI + bJ + cK, |A|^2 = -1,
/// with A(x) = x, when x has rank one; nullopt when x has rank two.
inline std::optional<SplitQuaternion> rank_one_witness(const MatR& x) {
  if (x.cols() != 2) throw Error("rank_one_witness: expected an n x 2 matrix");
  if (x.is_zero()) throw Error("rank_one_witness: x must be nonzero");
  if (rank(x) != 1) return std::nullopt;
  // x = u f; every nonzero row is a multiple of f, and ker x = span(v).
  std::size_t r = 0;
  while (x(r, 0) == 0 && x(r, 1) == 0) ++r;
  const Rat f0 = x(r, 0), f1 = x(r, 1);
  const MatR v{{-f1}, {f0}};
  const Rat vv = f0 * f0 + f1 * f1;
  // Skew reflection fixing the row space of x and negating ker x.
  const MatR A = MatR::identity(2) - v * v.transpose() * (Rat(2) / vv);
  SplitQuaternion q = quat_from_matrix(A);
  if (q.a0 != 0 || x * A != x) throw Error("rank_one_witness: internal inconsistency");
  return q;
}

/// Matrix of the endomorphism x -> x * m on g_{-1}, acting on the stacked
/// coordinates (X1; X2).
inline MatR right_mult_matrix(const MatR& m, std::size_t n) {
  MatR out(2 * n, 2 * n);
  // (x m)_{:,col} = sum_k x_{:,k} m(k, col)
  for (std::size_t col = 0; col < 2; ++col)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t r = 0; r < n; ++r) out(col * n + r, k * n + r) = m(k, col);
  return out;
}

inline MatR stack_columns(const MatR& x) { return vstack(x.col(0), x.col(1)); }

inline MatR unstack_columns(const MatR& v, std::size_t n) {
  if (v.rows() != 2 * n || v.cols() != 1) throw Error("unstack_columns: expected a 2n-vector");
  return hstack(v.block(0, 0, n, 1), v.block(n, 0, n, 1));
}

struct EigenDecomposition {
  std::vector<MatR> plus;   // basis of H+ as n x 2 matrices
  std::vector<MatR> minus;  // basis of H-
};

/// ±1 eigenspaces of the product structure I of `structure`.
inline EigenDecomposition eigenspace_decompose(const QuatStructure& structure, std::size_t n) {
  const MatR mi = right_mult_matrix(structure.i, n);
  const MatR id = MatR::identity(2 * n);
  EigenDecomposition out;
  for (const auto& v : rank_kernel(mi - id).kernel_basis) out.plus.push_back(unstack_columns(v, n));
  for (const auto& v : rank_kernel(mi + id).kernel_basis) out.minus.push_back(unstack_columns(v, n));
  return out;
}

struct MaxSubspace {
  std::vector<MatR> basis;  // n maps R^2 -> R^n with common kernel l
  SplitQuaternion reflection;  // skew reflection with A|l = -id, fixing the subspace
};

/// The n-dimensional subspace W_l of rank-one maps whose kernel is the line l.
inline MaxSubspace max_subspace_for_line(const MatR& l, std::size_t n) {
  if (l.rows() != 2 || l.cols() != 1 || l.is_zero()) throw Error("max_subspace_for_line: l must be a nonzero 2-vector");
  const MatR f{{l(1, 0), -l(0, 0)}};
  MaxSubspace out;
  for (std::size_t r = 0; r < n; ++r) {
    MatR e(n, 1);
    e(r, 0) = 1;
    out.basis.push_back(e * f);
  }
  const Rat ll = l(0, 0) * l(0, 0) + l(1, 0) * l(1, 0);
  const MatR A = MatR::identity(2) - l * l.transpose() * (Rat(2) / ll);
  out.reflection = quat_from_matrix(A);
  return out;
}

/// [A x, A y] - |A|^2 [x, y], which vanishes for a compatible Levi bracket.
inline Rat levi_compat_residual(const Signature& s, const Rat& a, const Rat& b, const Rat& c, const MatR& x,
                                const MatR& y) {
  return bracket_gm1(s, act_on_h(a, b, c, x), act_on_h(a, b, c, y)) - quat_norm2(a, b, c) * bracket_gm1(s, x, y);
}

}  // namespace liechains
