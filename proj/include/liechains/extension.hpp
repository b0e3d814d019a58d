#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liechains/linalg.hpp"
#include "liechains/matrix.hpp"
#include "liechains/path_sl.hpp"
#include "liechains/rational.hpp"
#include "liechains/sampling.hpp"
#include "liechains/so_contact.hpp"

namespace liechains {

// ---------------------------------------------------------------------------
// The linear map alpha: so(p+2,q+2) -> sl(2n+2)
// ---------------------------------------------------------------------------

/// alpha(x) with A = [[a,b],[c,d]], X = (X1|X2), U = (U1;U2):
///
///   [ (a+d)/2   -w          U1/2                 U2/2                ]
///   [ z         -(a+d)/2    -X2^t Ipq / 2        X1^t Ipq / 2        ]
///   [ X1        -Ipq U2^t   D + (d-a)/2 I        -c I                ]
///   [ X2         Ipq U1^t   -b I                 D + (a-d)/2 I       ]
inline SlElement alpha(const SoElement& x) {
  x.check_shapes();
  const std::size_t n = x.sig.n();
  const MatR I = ipq(x.sig);
  const MatR In = MatR::identity(n);
  const Rat half(1, 2);
  const Rat a = x.A(0, 0), b = x.A(0, 1), c = x.A(1, 0), d = x.A(1, 1);
  MatR m(2 * n + 2, 2 * n + 2);
  m(0, 0) = (a + d) * half;
  m(0, 1) = -x.w;
  m(1, 0) = x.z;
  m(1, 1) = -(a + d) * half;
  m.set_block(0, 2, x.U.row(0) * half);
  m.set_block(0, 2 + n, x.U.row(1) * half);
  m.set_block(1, 2, x.X.col(1).transpose() * I * (-half));
  m.set_block(1, 2 + n, x.X.col(0).transpose() * I * half);
  m.set_block(2, 0, x.X.col(0));
  m.set_block(2 + n, 0, x.X.col(1));
  m.set_block(2, 1, -(I * x.U.row(1).transpose()));
  m.set_block(2 + n, 1, I * x.U.row(0).transpose());
  m.set_block(2, 2, x.D + In * ((d - a) * half));
  m.set_block(2, 2 + n, In * (-c));
  m.set_block(2 + n, 2, In * (-b));
  m.set_block(2 + n, 2 + n, x.D + In * ((a - d) * half));
  return SlElement(n, m);
}

// ---------------------------------------------------------------------------
// The group homomorphism i: Q -> PGL(2n+2)
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
Matrix<T> i_map_blocks(const Matrix<T>& B, const Matrix<T>& C, const T& w, const T& sq, int sigma) {
  const std::size_t n = C.rows();
  const T p = B(0, 0), r = B(0, 1), s = B(1, 0), q = B(1, 1);
  const T sg = sigma > 0 ? T(1) : T(-1);
  Matrix<T> m(2 * n + 2, 2 * n + 2);
  m(0, 0) = sg * sq;
  m(0, 1) = -w * sg * sq;
  m(1, 1) = T(1) / sq;
  m.set_block(2, 2, C * (q / sq));
  m.set_block(2, 2 + n, C * (-s / sq));
  m.set_block(2 + n, 2, C * (-r / sq));
  m.set_block(2 + n, 2 + n, C * (p / sq));
  return m;
}

}  // namespace detail

/// i(h) for h = (B, C, w) with B = [[p,r],[s,q]], beta = det B:
///
///   [ sgn(beta) sqrt|beta|   -w sgn(beta) sqrt|beta|   0                  0                 ]
///   [ 0                      1/sqrt|beta|              0                  0                 ]
///   [ 0                      0                         q C / sqrt|beta|   -s C / sqrt|beta| ]
///   [ 0                      0                         -r C / sqrt|beta|   p C / sqrt|beta| ]
///
/// The sign factor makes the map equivariant also for det B < 0. Exact only
/// when |beta| is a rational square; throws otherwise.
inline MatR i_map(const QGroupElement& h) {
  const Rat beta = h.beta();
  const auto sq = exact_sqrt(abs(beta));
  if (!sq) throw Error("i_map: |det B| = " + to_string(abs(beta)) + " is not a rational square");
  return detail::i_map_blocks<Rat>(h.B, h.C, h.w, *sq, sign(beta));
}

/// Floating-point i for generic B.
inline MatF i_map_float(const MatF& B, const MatF& C, double w) {
  const double beta = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
  if (beta == 0.0 || !std::isfinite(beta)) throw Error("i_map_float: B is singular");
  return detail::i_map_blocks<double>(B, C, w, std::sqrt(std::fabs(beta)), beta > 0 ? 1 : -1);
}

/// Reads (B, C, w) off a float matrix of Q block form and applies i.
inline MatF i_map_float_from_matrix(const MatF& m, std::size_t n) {
  const MatF B = m.block(0, 0, 2, 2);
  const double beta = B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0);
  const MatF binv{{B(1, 1) / beta, -B(0, 1) / beta}, {-B(1, 0) / beta, B(0, 0) / beta}};
  const MatF wj = binv * m.block(0, n + 2, 2, 2);
  return i_map_float(B, m.block(2, 2, n, n), wj(0, 1));
}

/// True when a = b or a = -b.
template <typename T>
bool equal_up_to_sign(const Matrix<T>& a, const Matrix<T>& b) {
  return a == b || a == -b;
}

inline double distance_up_to_sign(const MatF& a, const MatF& b) {
  return std::fmin(max_abs_diff(a, b), max_abs_diff(a, -b));
}

/// An element of the Lie algebra of Q: A in gl(2), D in so(p,q), w.
inline SoElement q_algebra_element(const Signature& s, const MatR& A, const MatR& D, const Rat& w) {
  SoElement x = SoElement::from_g0(s, A, D);
  x.w = w;
  return x;
}

/// Derivative of i along the one-parameter subgroup generated by a Q algebra
/// element, in closed form. Uses d/dt sqrt|det exp(tA)| at 0 = tr(A)/2.
inline SlElement i_prime(const SoElement& xi) {
  if (!xi.X.is_zero() || !xi.U.is_zero() || xi.z != 0) throw Error("i_prime: argument is not in the Q algebra");
  const std::size_t n = xi.sig.n();
  const Rat half(1, 2);
  const Rat a = xi.A(0, 0), b = xi.A(0, 1), c = xi.A(1, 0), d = xi.A(1, 1);
  const Rat h = (a + d) * half;
  const MatR In = MatR::identity(n);
  MatR m(2 * n + 2, 2 * n + 2);
  m(0, 0) = h;
  m(0, 1) = -xi.w;
  m(1, 1) = -h;
  // product rule on (q/sqrt) C etc.: the entry derivative is B' - tr(A)/2 B, plus C'
  m.set_block(2, 2, In * (d - h) + xi.D);
  m.set_block(2, 2 + n, In * (-c));
  m.set_block(2 + n, 2, In * (-b));
  m.set_block(2 + n, 2 + n, In * (a - h) + xi.D);
  return SlElement(n, m);
}

/// Central-difference derivative of t -> i(exp(t xi)) at 0, in floats.
inline MatF i_prime_numeric(const SoElement& xi, double step) {
  const std::size_t n = xi.sig.n();
  const MatF m = to_float(xi.matrix());
  const MatF plus = i_map_float_from_matrix(exp_float(m * step), n);
  const MatF minus = i_map_float_from_matrix(exp_float(m * -step), n);
  return (plus - minus) * (1.0 / (2.0 * step));
}

// ---------------------------------------------------------------------------
// Hat lift and the obstruction Psi
// ---------------------------------------------------------------------------

/// Coordinates of the negative part of an sl element in the basis of
/// `sl_minus_basis`, i.e. its class modulo the nonnegative subalgebra.
inline MatR minus_coordinates(const SlElement& x) {
  const auto basis = sl_minus_basis(x.n());
  MatR v(basis.size(), 1);
  for (std::size_t k = 0; k < basis.size(); ++k) v(k, 0) = x(basis[k].row, basis[k].col);
  return v;
}

inline SlElement from_minus_coordinates(std::size_t n, const MatR& v) {
  const auto basis = sl_minus_basis(n);
  if (v.rows() != basis.size() || v.cols() != 1) throw Error("from_minus_coordinates: wrong length");
  MatR m(2 * n + 2, 2 * n + 2);
  for (std::size_t k = 0; k < basis.size(); ++k) m(basis[k].row, basis[k].col) = v(k, 0);
  return SlElement(n, m);
}

/// Basis of g_- + g_1 in the order: e, X column-major, U row-major.
inline std::vector<SoElement> lift_domain_basis(const Signature& s) {
  const std::size_t n = s.n();
  std::vector<SoElement> b;
  b.push_back(SoElement::e(s));
  for (std::size_t col = 0; col < 2; ++col)
    for (std::size_t r = 0; r < n; ++r) {
      SoElement x = SoElement::zero(s);
      x.X(r, col) = 1;
      b.push_back(x);
    }
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      SoElement x = SoElement::zero(s);
      x.U(r, col) = 1;
      b.push_back(x);
    }
  return b;
}

/// Matrix of (projection to sl/p~) o alpha restricted to g_- + g_1.
inline MatR lift_system(const Signature& s) {
  const auto basis = lift_domain_basis(s);
  MatR m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) m.set_block(0, j, minus_coordinates(alpha(basis[j])));
  return m;
}

/// The pair (i, alpha) at a fixed signature, with the hat-lift system
/// solved once.
class ExtensionPair {
 public:
  explicit ExtensionPair(const Signature& s) : sig_(s), basis_(lift_domain_basis(s)) {
    const MatR sys = lift_system(s);
    if (rank(sys) != sys.rows()) throw Error("ExtensionPair: alpha does not induce an isomorphism onto sl/p~");
    lift_inverse_ = inverse(sys);
  }

  const Signature& signature() const { return sig_; }
  std::size_t n() const { return sig_.n(); }

  /// The unique element of g_- + g_1 whose alpha-image is congruent to z
  /// modulo p~. Only the negative slots of z are read.
  SoElement hat_lift(const SlElement& z) const {
    if (z.n() != sig_.n()) throw Error("hat_lift: dimension mismatch");
    const MatR c = lift_inverse_ * minus_coordinates(z);
    SoElement out = SoElement::zero(sig_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (c(k, 0) != 0) out += c(k, 0) * basis_[k];
    return out;
  }

  /// Psi(z1, z2) = [alpha(z1^), alpha(z2^)] - alpha([z1^, z2^]).
  SlElement psi(const SlElement& z1, const SlElement& z2) const {
    const SoElement h1 = hat_lift(z1);
    const SoElement h2 = hat_lift(z2);
    return sl_bracket(alpha(h1), alpha(h2)) - alpha(bracket(h1, h2));
  }

 private:
  Signature sig_;
  std::vector<SoElement> basis_;
  MatR lift_inverse_;
};

/// The same obstruction on arbitrary elements of so(p+2,q+2).
inline SlElement psi_general(const SoElement& x, const SoElement& y) {
  return sl_bracket(alpha(x), alpha(y)) - alpha(bracket(x, y));
}

/// Rank of the hat-lift system; 4n+1 means alpha induces an isomorphism.
inline std::size_t lift_rank(const Signature& s) { return rank(lift_system(s)); }

// ---------------------------------------------------------------------------
// The trilinear map on g~_-2 and its two reference forms
// ---------------------------------------------------------------------------

namespace detail {
inline void check_vec(const Signature& s, const MatR& v, const char* who) {
  if (v.rows() != 2 * s.n() || v.cols() != 1) throw Error(std::string(who) + ": expected a 2n-vector");
}
inline MatR top(const Signature& s, const MatR& v) { return v.block(0, 0, s.n(), 1); }
inline MatR bottom(const Signature& s, const MatR& v) { return v.block(s.n(), 0, s.n(), 1); }
}  // namespace detail

/// (X, Y, Z) -> [Psi(X, [Y, W0]), Z] for X, Y, Z in g~_-2 = R^n x R^n.
inline MatR psi_trilinear(const ExtensionPair& pair, const MatR& x, const MatR& y, const MatR& z) {
  const Signature& s = pair.signature();
  detail::check_vec(s, x, "psi_trilinear");
  detail::check_vec(s, y, "psi_trilinear");
  detail::check_vec(s, z, "psi_trilinear");
  const SlElement yv = sl_bracket(SlElement::from_minus2(y), w0(s.n()));
  const SlElement value = pair.psi(SlElement::from_minus2(x), yv);
  // [value, Z] for value in g~_0^ss and Z in g~_-2 is the lower block applied to Z.
  return sl_bracket(value, SlElement::from_minus2(z)).minus2_vector();
}

/// f(X,Y,Z) = (<X1,Y2> Z1 - <X1,Y1> Z2 ; <X2,Y2> Z1 - <X1,Y2> Z2).
inline MatR trilinear_seed(const Signature& s, const MatR& x, const MatR& y, const MatR& z) {
  using detail::bottom;
  using detail::top;
  const MatR x1 = top(s, x), x2 = bottom(s, x), y1 = top(s, y), y2 = bottom(s, y);
  const MatR z1 = top(s, z), z2 = bottom(s, z);
  return vstack(z1 * inner(s, x1, y2) - z2 * inner(s, x1, y1), z1 * inner(s, x2, y2) - z2 * inner(s, x1, y2));
}

/// Sum of `trilinear_seed` over all six orderings of the arguments.
inline MatR symmetrized_reference(const Signature& s, const MatR& x, const MatR& y, const MatR& z) {
  detail::check_vec(s, x, "symmetrized_reference");
  detail::check_vec(s, y, "symmetrized_reference");
  detail::check_vec(s, z, "symmetrized_reference");
  const std::array<const MatR*, 3> args{&x, &y, &z};
  std::array<int, 3> perm{0, 1, 2};
  MatR acc(2 * s.n(), 1);
  do {
    acc += trilinear_seed(s, *args[perm[0]], *args[perm[1]], *args[perm[2]]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// The 2n x 2n value block of Psi(X, [Y, W0]) assembled from the symmetric
/// products R11 = (X1 Y1^t + Y1 X1^t) Ipq, R22 = (X2 Y2^t + Y2 X2^t) Ipq,
/// R12 = (X1 Y2^t + Y1 X2^t) Ipq, R21 = (X2 Y1^t + Y2 X1^t) Ipq:
///
///   [ R21 - (R12 + tr R12 I)/2     -(R11 - tr R11 I)/2          ]
///   [ (R22 - tr R22 I)/2           (R21 + tr R21 I)/2 - R12     ]
inline MatR r_block(const Signature& s, const MatR& x, const MatR& y) {
  using detail::bottom;
  using detail::top;
  detail::check_vec(s, x, "r_block");
  detail::check_vec(s, y, "r_block");
  const std::size_t n = s.n();
  const MatR I = ipq(s);
  const MatR In = MatR::identity(n);
  const MatR x1 = top(s, x), x2 = bottom(s, x), y1 = top(s, y), y2 = bottom(s, y);
  const auto sym = [&](const MatR& a, const MatR& b, const MatR& c, const MatR& d) {
    return (a * b.transpose() + c * d.transpose()) * I;
  };
  const MatR r11 = sym(x1, y1, y1, x1);
  const MatR r22 = sym(x2, y2, y2, x2);
  const MatR r12 = sym(x1, y2, y1, x2);
  const MatR r21 = sym(x2, y1, y2, x1);
  const Rat half(1, 2);
  MatR m(2 * n, 2 * n);
  m.set_block(0, 0, r21 - (r12 + In * r12.trace()) * half);
  m.set_block(0, n, -(r11 - In * r11.trace()) * half);
  m.set_block(n, 0, (r22 - In * r22.trace()) * half);
  m.set_block(n, n, (r21 + In * r21.trace()) * half - r12);
  return m;
}

/// Ratio c with a = c b, when b is nonzero and a is a multiple of b.
inline std::optional<Rat> proportionality(const MatR& a, const MatR& b) {
  std::optional<Rat> c;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j) == 0) {
        if (a(i, j) != 0) return std::nullopt;
        continue;
      }
      const Rat r = a(i, j) / b(i, j);
      if (c && *c != r) return std::nullopt;
      c = r;
    }
  return c;
}

// ---------------------------------------------------------------------------
// Cochains, the codifferential and curvature analysis
// ---------------------------------------------------------------------------

/// Antisymmetric bilinear map on g~_- with values in sl(2n+2), stored on
/// ordered basis pairs (a < b) of `sl_minus_basis`.
class Cochain2 {
 public:
  explicit Cochain2(std::size_t n) : n_(n), dim_(sl_minus_basis(n).size()) {}

  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }

  void set(std::size_t a, std::size_t b, const SlElement& v) {
    if (a == b) {
      if (!v.is_zero()) throw Error("Cochain2: diagonal values must vanish");
      return;
    }
    if (a > b) {
      set(b, a, Rat(-1) * v);
      return;
    }
    if (v.is_zero()) values_.erase({a, b});
    else values_[{a, b}] = v;
  }

  SlElement get(std::size_t a, std::size_t b) const {
    if (a == b) return SlElement(n_);
    const bool swapped = a > b;
    const auto it = values_.find(swapped ? std::pair{b, a} : std::pair{a, b});
    if (it == values_.end()) return SlElement(n_);
    return swapped ? Rat(-1) * it->second : it->second;
  }

  /// Nonzero values keyed by (a, b) with a < b.
  const std::map<std::pair<std::size_t, std::size_t>, SlElement>& entries() const { return values_; }
  bool is_zero() const { return values_.empty(); }

 private:
  std::size_t n_;
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, SlElement> values_;
};

/// Element of p~_+ (x) sl(2n+2): value attached to the dual of each g~_-
/// basis element.
class Cochain1 {
 public:
  explicit Cochain1(std::size_t n) : n_(n), values_(sl_minus_basis(n).size(), SlElement(n)) {}

  std::size_t n() const { return n_; }
  const SlElement& get(std::size_t a) const { return values_.at(a); }
  void add(std::size_t a, const SlElement& v) { values_.at(a) = values_.at(a) + v; }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<SlElement> values_;
};

/// Psi over all basis pairs of g~_-.
inline Cochain2 psi_cochain(const ExtensionPair& pair) {
  const std::size_t n = pair.n();
  const auto basis = sl_minus_basis(n);
  Cochain2 phi(n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      phi.set(a, b, pair.psi(basis_element(n, basis[a]), basis_element(n, basis[b])));
  return phi;
}

/// Coordinates of an element of p~_+ in the dual basis (pairing tr(x y)).
inline std::vector<Rat> dual_coordinates(const SlElement& x) {
  const auto basis = sl_minus_basis(x.n());
  std::vector<Rat> c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) c[k] = x(basis[k].col, basis[k].row);
  return c;
}

/// Lie algebra homology differential on Λ²p~_+ (x) g~ -> p~_+ (x) g~:
///
///   Z1 ∧ Z2 (x) W  ->  Z1 (x) [Z2, W] - Z2 (x) [Z1, W] - [Z1, Z2] (x) W
///
/// where g~/p~ is identified with g~_- and its dual with p~_+ by the trace
/// form, so the basis element dual to the unit E_rc is E_cr.
inline Cochain1 codifferential(const Cochain2& phi) {
  const std::size_t n = phi.n();
  const auto basis = sl_minus_basis(n);
  Cochain1 out(n);
  for (const auto& [key, w] : phi.entries()) {
    const auto [a, b] = key;
    const SlElement za = dual_element(n, basis[a]);
    const SlElement zb = dual_element(n, basis[b]);
    out.add(a, sl_bracket(zb, w));
    out.add(b, Rat(-1) * sl_bracket(za, w));
    const auto c = dual_coordinates(sl_bracket(za, zb));
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) out.add(k, Rat(-1) * c[k] * w);
  }
  return out;
}

/// The next differential p~_+ (x) g~ -> g~: Z (x) W -> -[Z, W].
inline SlElement codifferential1(const Cochain1& psi) {
  const auto basis = sl_minus_basis(psi.n());
  SlElement acc(psi.n());
  for (std::size_t a = 0; a < basis.size(); ++a)
    acc = acc - sl_bracket(dual_element(psi.n(), basis[a]), psi.get(a));
  return acc;
}

inline bool is_normal(const Cochain2& phi) { return codifferential(phi).is_zero(); }

struct CurvatureReport {
  std::set<int> homogeneities;
  bool torsion_free = true;
  bool regular = true;
  bool nonzero = false;
};

inline CurvatureReport curvature_report(const Cochain2& phi) {
  const auto basis = sl_minus_basis(phi.n());
  CurvatureReport r;
  for (const auto& [key, v] : phi.entries()) {
    r.nonzero = true;
    const int d1 = slot_degree(basis[key.first].slot);
    const int d2 = slot_degree(basis[key.second].slot);
    for (int d0 = -2; d0 <= 2; ++d0) {
      if (grade_project(v, d0).is_zero()) continue;
      r.homogeneities.insert(d0 - d1 - d2);
      if (d0 < 0) r.torsion_free = false;
      if (d0 - d1 - d2 <= 0) r.regular = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Compatibility conditions of the pair (i, alpha)
// ---------------------------------------------------------------------------

struct ConditionResult {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  std::string witness;  // set on failure
  double max_error = 0.0;  // float paths only
};

template <typename T>
std::string describe(const Matrix<T>& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

inline std::string describe(const SoElement& x) {
  std::ostringstream os;
  os << "{z=" << x.z << ", X=" << x.X << ", A=" << x.A << ", D=" << x.D << ", U=" << x.U << ", w=" << x.w << "}";
  return os.str();
}

inline std::string describe(const QGroupElement& h) {
  std::ostringstream os;
  os << "{B=" << h.B << ", C=" << h.C << ", w=" << h.w << "}";
  return os.str();
}

/// Equivariance: alpha(Ad(h) x) = Ad(i(h)) alpha(x) on random h in Q with
/// |det B| a rational square and random x.
inline ConditionResult check_equivariance(const Signature& s, std::size_t trials, Sampler& rng) {
  ConditionResult r{"alpha is Q-equivariant", true, trials, "", 0.0};
  for (std::size_t t = 0; t < trials; ++t) {
    const QGroupElement h = rng.q_element(s, true);
    const SoElement x = rng.so_element(s);
    const MatR ih = i_map(h);
    const SlElement lhs = alpha(SoElement::from_matrix(s, h.matrix() * x.matrix() * inverse(h.matrix())));
    const MatR rhs = ih * alpha(x).matrix() * inverse(ih);
    if (lhs.matrix() != rhs) {
      r.pass = false;
      r.witness = "h=" + describe(h) + " x=" + describe(x);
      return r;
    }
  }
  return r;
}

/// Derivative: alpha agrees with the derivative of i on the Q algebra,
/// exactly in closed form and numerically by central differences.
inline std::pair<ConditionResult, ConditionResult> check_derivative(const Signature& s, std::size_t trials,
                                                                   Sampler& rng, double tolerance = 1e-8) {
  ConditionResult exact{"alpha restricted to q equals i' (closed form)", true, trials, "", 0.0};
  ConditionResult numeric{"alpha restricted to q equals i' (central differences)", true, trials, "", 0.0};
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR a_part = rng.matrix(2, 2, 2, 3);
    const MatR d_part = rng.so_pq(s, 2, 3);
    const Rat w_part = rng.rational(2, 3);
    const SoElement xi = q_algebra_element(s, a_part, d_part, w_part);
    const SlElement a = alpha(xi);
    if (exact.pass && i_prime(xi) != a) {
      exact.pass = false;
      exact.witness = "xi=" + describe(xi);
    }
    const double err = max_abs_diff(i_prime_numeric(xi, 1e-5), to_float(a.matrix()));
    numeric.max_error = std::fmax(numeric.max_error, err);
    if (numeric.pass && !(err <= tolerance)) {
      numeric.pass = false;
      numeric.witness = "xi=" + describe(xi) + " error=" + std::to_string(err);
    }
  }
  return {exact, numeric};
}

/// Isomorphism: alpha induces a linear isomorphism g/q -> sl/p~; checked
/// as full rank 4n+1 of the restriction to g_- + g_1.
inline ConditionResult check_isomorphism(const Signature& s) {
  const std::size_t rk = lift_rank(s);
  const std::size_t want = 4 * s.n() + 1;
  ConditionResult r{"alpha induces an isomorphism onto sl/p", rk == want, 1, "", 0.0};
  if (!r.pass) r.witness = "rank=" + std::to_string(rk) + " expected=" + std::to_string(want);
  return r;
}

/// i(h1 h2) = +-i(h1) i(h2), exactly on square-determinant pairs.
inline ConditionResult check_homomorphism_exact(const Signature& s, std::size_t trials, Sampler& rng) {
  ConditionResult r{"i is a homomorphism up to sign (exact)", true, trials, "", 0.0};
  for (std::size_t t = 0; t < trials; ++t) {
    const QGroupElement h1 = rng.q_element(s, true);
    const QGroupElement h2 = rng.q_element(s, true);
    if (!equal_up_to_sign(i_map(h1 * h2), i_map(h1) * i_map(h2))) {
      r.pass = false;
      r.witness = "h1=" + describe(h1) + " h2=" + describe(h2);
      return r;
    }
  }
  return r;
}

/// Same property for generic B in floating point.
inline ConditionResult check_homomorphism_float(const Signature& s, std::size_t trials, Sampler& rng,
                                                double tolerance = 1e-10) {
  ConditionResult r{"i is a homomorphism up to sign (float)", true, trials, "", 0.0};
  const std::size_t n = s.n();
  for (std::size_t t = 0; t < trials; ++t) {
    const QGroupElement h1 = rng.q_element(s, false);
    const QGroupElement h2 = rng.q_element(s, false);
    const MatF f1 = i_map_float_from_matrix(to_float(h1.matrix()), n);
    const MatF f2 = i_map_float_from_matrix(to_float(h2.matrix()), n);
    const MatF f12 = i_map_float_from_matrix(to_float((h1 * h2).matrix()), n);
    const double err = distance_up_to_sign(f12, f1 * f2);
    r.max_error = std::fmax(r.max_error, err);
    if (r.pass && !(err <= tolerance)) {
      r.pass = false;
      r.witness = "h1=" + describe(h1) + " h2=" + describe(h2) + " error=" + std::to_string(err);
    }
  }
  return r;
}

/// All three compatibility conditions of the pair.
inline std::vector<ConditionResult> check_pair_conditions(const Signature& s, std::size_t trials, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<ConditionResult> out;
  out.push_back(check_equivariance(s, trials, rng));
  auto [exact, numeric] = check_derivative(s, trials, rng);
  out.push_back(exact);
  out.push_back(numeric);
  out.push_back(check_isomorphism(s));
  return out;
}

}  // namespace liechains
