#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liechains/linalg.hpp"
#include "liechains/matrix.hpp"
#include "liechains/rational.hpp"

namespace liechains {

/// Signature (p, q) of the bundle metric; the ambient form has signature
/// (p+2, q+2) on R^{n+4}.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1) {
      throw Error("Signature: need p, q >= 0 and p + q >= 1 (got " + std::to_string(p) + "," +
                  std::to_string(q) + ")");
    }
  }

  std::size_t n() const { return static_cast<std::size_t>(p + q); }
  std::size_t dim_ambient() const { return n() + 4; }
  /// dim so(p+2, q+2)
  std::size_t dim_algebra() const { return (n() + 4) * (n() + 3) / 2; }
  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline MatR ipq(const Signature& s) {
  MatR m(s.n(), s.n());
  for (std::size_t i = 0; i < s.n(); ++i) m(i, i) = static_cast<int>(i) < s.p ? 1 : -1;
  return m;
}

/// The 2x2 block J = [[0,1],[-1,0]].
inline MatR jay() { return MatR{{0, 1}, {-1, 0}}; }

/// Symmetric form on R^{n+4}: [[0,0,-I2],[0,Ipq,0],[-I2,0,0]].
inline MatR form_s(const Signature& s) {
  const std::size_t n = s.n();
  MatR m(n + 4, n + 4);
  m.set_block(0, n + 2, -MatR::identity(2));
  m.set_block(2, 2, ipq(s));
  m.set_block(n + 2, 0, -MatR::identity(2));
  return m;
}

/// <u, v> = u^t Ipq v for column vectors.
inline Rat inner(const Signature& s, const MatR& u, const MatR& v) {
  if (u.rows() != s.n() || v.rows() != s.n() || u.cols() != 1 || v.cols() != 1) {
    throw Error("inner: expected n-vectors");
  }
  Rat acc = 0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (static_cast<int>(i) < s.p) acc += u(i, 0) * v(i, 0);
    else acc -= u(i, 0) * v(i, 0);
  }
  return acc;
}

inline bool in_so_pq(const Signature& s, const MatR& d) {
  const MatR I = ipq(s);
  return (d.transpose() * I + I * d).is_zero();
}

inline bool is_orthogonal_pq(const Signature& s, const MatR& c) {
  return c.rows() == s.n() && c.cols() == s.n() && c.transpose() * ipq(s) * c == ipq(s);
}

/// True when g preserves the ambient form exactly.
inline bool in_orthogonal_group(const Signature& s, const MatR& g) {
  const MatR S = form_s(s);
  return g.rows() == s.dim_ambient() && g.cols() == s.dim_ambient() && g.transpose() * S * g == S;
}

/// Inverse of an element of O(FormS): g^{-1} = S^{-1} g^t S, and S^{-1} = S.
inline MatR orthogonal_inverse(const Signature& s, const MatR& g) {
  const MatR S = form_s(s);
  return S * g.transpose() * S;
}

/// Element of so(p+2,q+2) in contact-graded block form.
///
///   [ A        U        w J  ]
///   [ X        D        Ipq U^t ]
///   [ z J      X^t Ipq  -A^t ]
///
/// Degrees: z -> -2, X -> -1, (A, D) -> 0, U -> +1, w -> +2.
struct SoElement {
  Signature sig;
  Rat z;
  MatR X;  // n x 2
  MatR A;  // 2 x 2
  MatR D;  // n x n, in so(p,q)
  MatR U;  // 2 x n
  Rat w;

  static SoElement zero(const Signature& s) {
    return SoElement{s, 0, MatR(s.n(), 2), MatR(2, 2), MatR(s.n(), s.n()), MatR(2, s.n()), 0};
  }
  /// The g_{-2} generator e.
  static SoElement e(const Signature& s) {
    SoElement x = zero(s);
    x.z = 1;
    return x;
  }
  static SoElement from_gm1(const Signature& s, const MatR& X) {
    SoElement x = zero(s);
    x.X = X;
    x.check_shapes();
    return x;
  }
  static SoElement from_g1(const Signature& s, const MatR& U) {
    SoElement x = zero(s);
    x.U = U;
    x.check_shapes();
    return x;
  }
  static SoElement from_g0(const Signature& s, const MatR& A, const MatR& D) {
    SoElement x = zero(s);
    x.A = A;
    x.D = D;
    x.check_shapes();
    if (!in_so_pq(s, D)) throw Error("SoElement: D is not in so(p,q)");
    return x;
  }

  void check_shapes() const {
    const std::size_t n = sig.n();
    if (X.rows() != n || X.cols() != 2 || A.rows() != 2 || A.cols() != 2 || D.rows() != n ||
        D.cols() != n || U.rows() != 2 || U.cols() != n) {
      throw Error("SoElement: block shapes do not match signature " + sig.str());
    }
  }

  MatR matrix() const {
    check_shapes();
    const std::size_t n = sig.n();
    const MatR I = ipq(sig);
    const MatR J = jay();
    MatR m(n + 4, n + 4);
    m.set_block(0, 0, A);
    m.set_block(0, 2, U);
    m.set_block(0, n + 2, J * w);
    m.set_block(2, 0, X);
    m.set_block(2, 2, D);
    m.set_block(2, n + 2, I * U.transpose());
    m.set_block(n + 2, 0, J * z);
    m.set_block(n + 2, 2, X.transpose() * I);
    m.set_block(n + 2, n + 2, -A.transpose());
    return m;
  }

  /// Reads the blocks back from an assembled matrix; throws unless the
  /// matrix lies in so(FormS).
  static SoElement from_matrix(const Signature& s, const MatR& m) {
    const std::size_t n = s.n();
    if (m.rows() != n + 4 || m.cols() != n + 4) throw Error("SoElement::from_matrix: wrong size");
    const MatR S = form_s(s);
    if (!(m.transpose() * S + S * m).is_zero()) {
      throw Error("SoElement::from_matrix: matrix is not in so(p+2,q+2)");
    }
    SoElement x{s, m(n + 3, 0) * -1, m.block(2, 0, n, 2), m.block(0, 0, 2, 2), m.block(2, 2, n, n),
                m.block(0, 2, 2, n), m(0, n + 3)};
    return x;
  }

  /// Coordinates in the fixed basis order: z, X column-major, A row-major,
  /// D over pairs i<j, U row-major, w.
  std::vector<Rat> coordinates() const {
    const std::size_t n = sig.n();
    std::vector<Rat> c;
    c.reserve(sig.dim_algebra());
    c.push_back(z);
    for (std::size_t col = 0; col < 2; ++col)
      for (std::size_t r = 0; r < n; ++r) c.push_back(X(r, col));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) c.push_back(A(i, j));
    const MatR I = ipq(sig);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) c.push_back(D(i, j) / I(i, i));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < n; ++j) c.push_back(U(i, j));
    c.push_back(w);
    return c;
  }

  static SoElement from_coordinates(const Signature& s, const std::vector<Rat>& c) {
    if (c.size() != s.dim_algebra()) throw Error("SoElement::from_coordinates: wrong length");
    const std::size_t n = s.n();
    const MatR I = ipq(s);
    SoElement x = zero(s);
    std::size_t k = 0;
    x.z = c[k++];
    for (std::size_t col = 0; col < 2; ++col)
      for (std::size_t r = 0; r < n; ++r) x.X(r, col) = c[k++];
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) x.A(i, j) = c[k++];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        // basis element Ipq (E_ij - E_ji)
        x.D(i, j) = c[k] * I(i, i);
        x.D(j, i) = -c[k] * I(j, j);
        ++k;
      }
    }
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < n; ++j) x.U(i, j) = c[k++];
    x.w = c[k++];
    return x;
  }

  /// Component of degree d in {-2,...,2}.
  SoElement grade(int d) const {
    SoElement x = zero(sig);
    switch (d) {
      case -2: x.z = z; break;
      case -1: x.X = X; break;
      case 0: x.A = A; x.D = D; break;
      case 1: x.U = U; break;
      case 2: x.w = w; break;
      default: break;
    }
    return x;
  }

  bool is_zero() const { return z == 0 && w == 0 && X.is_zero() && A.is_zero() && D.is_zero() && U.is_zero(); }

  SoElement& operator+=(const SoElement& o) {
    z += o.z; X += o.X; A += o.A; D += o.D; U += o.U; w += o.w;
    return *this;
  }
  SoElement& operator*=(const Rat& s) {
    z *= s; X *= s; A *= s; D *= s; U *= s; w *= s;
    return *this;
  }
  friend SoElement operator+(SoElement a, const SoElement& b) { return a += b; }
  friend SoElement operator-(SoElement a, const SoElement& b) {
    SoElement nb = b;
    nb *= Rat(-1);
    return a += nb;
  }
  friend SoElement operator*(const Rat& s, SoElement a) { return a *= s; }

  friend bool operator==(const SoElement& a, const SoElement& b) {
    return a.sig == b.sig && a.z == b.z && a.w == b.w && a.X == b.X && a.A == b.A && a.D == b.D && a.U == b.U;
  }
};

/// Basis of so(p+2,q+2) in the fixed enumeration order, with degrees.
inline std::vector<SoElement> so_basis(const Signature& s) {
  std::vector<SoElement> b;
  const std::size_t d = s.dim_algebra();
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rat> c(d, Rat(0));
    c[k] = 1;
    b.push_back(SoElement::from_coordinates(s, c));
  }
  return b;
}

inline std::vector<int> so_basis_degrees(const Signature& s) {
  const std::size_t n = s.n();
  std::vector<int> deg;
  deg.push_back(-2);
  deg.insert(deg.end(), 2 * n, -1);
  deg.insert(deg.end(), 4 + n * (n - 1) / 2, 0);
  deg.insert(deg.end(), 2 * n, 1);
  deg.push_back(2);
  return deg;
}

/// Lie bracket as the commutator of assembled matrices.
inline SoElement bracket(const SoElement& x, const SoElement& y) {
  if (!(x.sig == y.sig)) throw Error("bracket: signature mismatch " + x.sig.str() + " vs " + y.sig.str());
  return SoElement::from_matrix(x.sig, commutator(x.matrix(), y.matrix()));
}

/// Closed-form bracket g_{-1} x g_{-1} -> g_{-2}, as the coefficient of e:
/// <X1,Y2> - <X2,Y1>.
inline Rat bracket_gm1(const Signature& s, const MatR& x, const MatR& y) {
  if (x.rows() != s.n() || y.rows() != s.n() || x.cols() != 2 || y.cols() != 2) {
    throw Error("bracket_gm1: expected n x 2 matrices");
  }
  return inner(s, x.col(0), y.col(1)) - inner(s, x.col(1), y.col(0));
}

struct EquivarianceResiduals {
  Rat orthogonal;   // [CX,CY] - [X,Y]
  Rat determinant;  // [XA,YA] - det A [X,Y]
};

inline EquivarianceResiduals equivariance_checks(const Signature& s, const MatR& c, const MatR& a, const MatR& x,
                                                 const MatR& y) {
  if (!is_orthogonal_pq(s, c)) throw Error("equivariance_checks: c is not in O(p,q)");
  if (a.rows() != 2 || a.cols() != 2) throw Error("equivariance_checks: a must be 2x2");
  const Rat base = bracket_gm1(s, x, y);
  return {bracket_gm1(s, c * x, c * y) - base, bracket_gm1(s, x * a, y * a) - determinant(a) * base};
}

/// Element of G0 = (GL(2) x O(p,q)) / {±1}, represented by a pair (B, C).
struct G0Element {
  Signature sig;
  MatR B;
  MatR C;

  G0Element(const Signature& s, MatR b, MatR c) : sig(s), B(std::move(b)), C(std::move(c)) {
    if (B.rows() != 2 || B.cols() != 2 || determinant(B) == 0) throw Error("G0Element: B must be invertible 2x2");
    if (!is_orthogonal_pq(sig, C)) throw Error("G0Element: C must lie in O(p,q)");
  }

  MatR matrix() const {
    const std::size_t n = sig.n();
    MatR m(n + 4, n + 4);
    m.set_block(0, 0, B);
    m.set_block(2, 2, C);
    m.set_block(n + 2, n + 2, inverse(B).transpose());
    return m;
  }

  G0Element negated() const { return G0Element(sig, -B, -C); }

  /// Equality of classes mod ±1.
  friend bool operator==(const G0Element& a, const G0Element& b) {
    return a.sig == b.sig && ((a.B == b.B && a.C == b.C) || (a.B == -b.B && a.C == -b.C));
  }
};

/// Adjoint action of G0 on g_-: (z, X) -> (z / det B, C X B^{-1}).
inline std::pair<Rat, MatR> ad_g0(const G0Element& g, const Rat& z, const MatR& x) {
  return {z / determinant(g.B), g.C * x * inverse(g.B)};
}

/// Element of Q: the stabilizer in P of the line g_{-2}. Block form
///
///   [ B  0  w B J   ]
///   [ 0  C  0       ]
///   [ 0  0  B^{-t}  ]
///
/// which equals diag(B, C, B^{-t}) * exp(w-component).
struct QGroupElement {
  Signature sig;
  MatR B;
  MatR C;
  Rat w;

  QGroupElement(const Signature& s, MatR b, MatR c, Rat w_)
      : sig(s), B(std::move(b)), C(std::move(c)), w(std::move(w_)) {
    if (B.rows() != 2 || B.cols() != 2 || determinant(B) == 0) throw Error("QGroupElement: B must be invertible");
    if (!is_orthogonal_pq(sig, C)) throw Error("QGroupElement: C must lie in O(p,q)");
  }

  static QGroupElement identity(const Signature& s) {
    return QGroupElement(s, MatR::identity(2), MatR::identity(s.n()), 0);
  }

  Rat beta() const { return determinant(B); }

  MatR matrix() const {
    const std::size_t n = sig.n();
    MatR m(n + 4, n + 4);
    m.set_block(0, 0, B);
    m.set_block(0, n + 2, B * jay() * w);
    m.set_block(2, 2, C);
    m.set_block(n + 2, n + 2, inverse(B).transpose());
    return m;
  }

  /// Recovers (B, C, w) from a matrix of the block form above.
  static QGroupElement from_matrix(const Signature& s, const MatR& m) {
    const std::size_t n = s.n();
    const MatR B = m.block(0, 0, 2, 2);
    const MatR C = m.block(2, 2, n, n);
    const MatR wj = inverse(B) * m.block(0, n + 2, 2, 2);
    QGroupElement h(s, B, C, wj(0, 1));
    if (h.matrix() != m) throw Error("QGroupElement::from_matrix: matrix is not in Q");
    return h;
  }

  QGroupElement operator*(const QGroupElement& o) const { return from_matrix(sig, matrix() * o.matrix()); }

  friend bool operator==(const QGroupElement& a, const QGroupElement& b) {
    return a.sig == b.sig && a.w == b.w &&
           ((a.B == b.B && a.C == b.C) || (a.B == -b.B && a.C == -b.C));
  }
};

/// Ad(g) x = g x g^{-1} for g in O(FormS).
inline SoElement adjoint(const Signature& s, const MatR& g, const SoElement& x) {
  return SoElement::from_matrix(s, g * x.matrix() * orthogonal_inverse(s, g));
}

inline std::size_t segre_rank(const MatR& x) { return x.is_zero() ? 0 : rank(x); }

/// Closed form [f1 (x) u1, f2 (x) u2] = |f1,f2| <u1,u2>; f are 1x2 rows, u are
/// n-columns, and f (x) u is the n x 2 matrix u f.
inline Rat rank_one_bracket(const Signature& s, const MatR& f1, const MatR& f2, const MatR& u1, const MatR& u2) {
  if (f1.rows() != 1 || f1.cols() != 2 || f2.rows() != 1 || f2.cols() != 2) {
    throw Error("rank_one_bracket: covectors must be 1x2");
  }
  const Rat wedge = f1(0, 0) * f2(0, 1) - f1(0, 1) * f2(0, 0);
  return wedge * inner(s, u1, u2);
}

/// Structure constants c[i][j] = coordinates of [b_i, b_j] in the fixed basis.
inline std::vector<std::vector<std::vector<Rat>>> structure_constants(const Signature& s) {
  const auto basis = so_basis(s);
  const std::size_t d = basis.size();
  std::vector<std::vector<std::vector<Rat>>> c(d, std::vector<std::vector<Rat>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i][j] = bracket(basis[i], basis[j]).coordinates();
  return c;
}

}  // namespace liechains
