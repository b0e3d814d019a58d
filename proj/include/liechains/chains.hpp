#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liechains/extension.hpp"
#include "liechains/linalg.hpp"
#include "liechains/matrix.hpp"
#include "liechains/rational.hpp"
#include "liechains/so_contact.hpp"
#include "liechains/split_quat.hpp"

namespace liechains {

/// A point of the homogeneous model: an isotropic 2-plane in R^{n+4}, given
/// by an (n+4) x 2 spanning matrix.
class ModelPoint {
 public:
  ModelPoint(const Signature& s, MatR span) : sig_(s), span_(std::move(span)) {
    if (span_.rows() != s.dim_ambient() || span_.cols() != 2) throw Error("ModelPoint: span must be (n+4) x 2");
    if (rank(span_) != 2) throw Error("ModelPoint: span must have rank 2");
    if (!isotropy_residual().is_zero()) throw Error("ModelPoint: plane is not isotropic");
  }

  const Signature& signature() const { return sig_; }
  const MatR& span() const { return span_; }

  /// span^t S span; the zero matrix for every valid point.
  MatR isotropy_residual() const { return span_.transpose() * form_s(sig_) * span_; }

  /// Points are equal when their column spans agree.
  friend bool operator==(const ModelPoint& a, const ModelPoint& b) {
    return a.sig_ == b.sig_ && rank(hstack(a.span_, b.span_)) == 2;
  }

 private:
  Signature sig_;
  MatR span_;
};

/// The plane spanned by the first two standard basis vectors.
inline ModelPoint origin(const Signature& s) {
  MatR m(s.dim_ambient(), 2);
  m(0, 0) = 1;
  m(1, 1) = 1;
  return ModelPoint(s, m);
}

inline ModelPoint act(const MatR& g, const ModelPoint& pt) {
  if (!in_orthogonal_group(pt.signature(), g)) throw Error("act: g does not preserve the ambient form");
  return ModelPoint(pt.signature(), g * pt.span());
}

/// Matrix of the g_{-2} generator e.
inline MatR e_matrix(const Signature& s) { return SoElement::e(s).matrix(); }

/// g exp(tE) = g (I + tE); exact because E^2 = 0.
inline MatR chain_group_element(const Signature& s, const MatR& g, const Rat& t) {
  return g * exp_nilpotent(e_matrix(s) * t, 2);
}

/// The chain through g.origin: t -> g exp(tE) P.
inline ModelPoint chain_eval(const Signature& s, const MatR& g, const Rat& t) {
  if (!in_orthogonal_group(s, g)) throw Error("chain_eval: g does not preserve the ambient form");
  return ModelPoint(s, chain_group_element(s, g, t).block(0, 0, s.dim_ambient(), 2));
}

/// Velocity class of t -> g exp(tX) at parameter t, as the element
/// (g exp(tX))^{-1} d/dt (g exp(tX)) of so(p+2,q+2); its class mod p is the
/// tangent direction pulled back to g/p.
inline SoElement velocity_class(const Signature& s, const MatR& g, const SoElement& generator, const Rat& t) {
  const std::size_t bound = 5;  // the grading has five parts
  const MatR gt = g * exp_nilpotent(generator.matrix() * t, bound);
  const MatR dgt = gt * generator.matrix();
  return SoElement::from_matrix(s, orthogonal_inverse(s, gt) * dgt);
}

/// True when a curve direction is transverse to the contact distribution,
/// i.e. its velocity class has a nonzero g_{-2} component.
inline bool is_transverse(const SoElement& velocity) { return velocity.z != 0; }

/// Transversality of the standard chain at parameter t.
inline bool chain_transversality(const Signature& s, const Rat& t) {
  return is_transverse(velocity_class(s, MatR::identity(s.dim_ambient()), SoElement::e(s), t));
}

// ---------------------------------------------------------------------------
// The S tensor
// ---------------------------------------------------------------------------

/// Evaluation data for S on g_{-1} at the origin: a signature, a nonzero
/// scale and a basis (I, J, K) of the split-quaternionic structure.
struct STensorEval {
  Signature sig;
  Rat scale = 1;
  QuatStructure quat = QuatStructure::standard();

  explicit STensorEval(const Signature& s) : sig(s) {}
  STensorEval(const Signature& s, Rat scale_, QuatStructure q) : sig(s), scale(std::move(scale_)), quat(std::move(q)) {
    if (scale == 0) throw Error("STensorEval: scale must be nonzero");
    if (!quat.satisfies_relations()) throw Error("STensorEval: (I, J, K) violate the split-quaternion relations");
  }
};

/// S(x, y, z): cyclic sum of L(x, Iy) Iz + L(x, Jy) Jz - L(x, Ky) Kz, times
/// the stored scale. Arguments are n x 2 matrices.
inline MatR s_tensor(const STensorEval& ev, const MatR& x, const MatR& y, const MatR& z) {
  const auto term = [&](const MatR& a, const MatR& b, const MatR& c) {
    const auto& q = ev.quat;
    return c * q.i * bracket_gm1(ev.sig, a, b * q.i) + c * q.j * bracket_gm1(ev.sig, a, b * q.j) -
           c * q.k * bracket_gm1(ev.sig, a, b * q.k);
  };
  return (term(x, y, z) + term(y, z, x) + term(z, x, y)) * ev.scale;
}

/// S obtained from the obstruction Psi: the trilinear map on g~_-2 carried
/// to g_{-1} by stacking columns, (X1 | X2) -> (X1 ; X2).
inline MatR s_tensor_pipeline(const ExtensionPair& pair, const MatR& x, const MatR& y, const MatR& z) {
  return unstack_columns(psi_trilinear(pair, stack_columns(x), stack_columns(y), stack_columns(z)), pair.n());
}

/// True when x has rank one, decided from S alone:
/// a nonzero cubic S(x,x,x) means rank two; otherwise x has rank one when
/// some L(x, Ax) with A in span(I,J,K) is nonzero, and in the remaining
/// isotropic case when S(x, x, y) = x is solvable in y.
inline bool rank_one_by_S(const STensorEval& ev, const MatR& x) {
  if (x.is_zero()) throw Error("rank_one_by_S: x must be nonzero");
  if (x.rows() != ev.sig.n() || x.cols() != 2) throw Error("rank_one_by_S: expected an n x 2 matrix");
  if (!s_tensor(ev, x, x, x).is_zero()) return false;
  const auto& q = ev.quat;
  if (bracket_gm1(ev.sig, x, x * q.i) != 0 || bracket_gm1(ev.sig, x, x * q.j) != 0 ||
      bracket_gm1(ev.sig, x, x * q.k) != 0) {
    return true;
  }
  const std::size_t n = ev.sig.n();
  MatR system(2 * n, 2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    MatR e(2 * n, 1);
    e(k, 0) = 1;
    system.set_block(0, k, stack_columns(s_tensor(ev, x, x, unstack_columns(e, n))));
  }
  return solve_linear(system, stack_columns(x)).has_value();
}

struct ConeReport {
  std::vector<bool> rank_one;     // classification by S
  std::vector<bool> ground_truth; // segre_rank == 1
  std::size_t misclassified = 0;
};

/// Throws when S vanishes on every triple of basis vectors.
inline void require_nondegenerate(const STensorEval& ev) {
  const std::size_t n = ev.sig.n();
  std::vector<MatR> basis;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    MatR e(n, 2);
    e(k % n, k / n) = 1;
    basis.push_back(e);
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      for (std::size_t c = b; c < basis.size(); ++c)
        if (!s_tensor(ev, basis[a], basis[b], basis[c]).is_zero()) return;
  throw Error("reconstruct_cone: S vanishes identically");
}

/// Classifies each sample as rank one or not using S only and compares with
/// the exact rank.
inline ConeReport reconstruct_cone(const STensorEval& ev, const std::vector<MatR>& samples) {
  require_nondegenerate(ev);
  ConeReport r;
  for (const auto& x : samples) {
    if (x.is_zero()) throw Error("reconstruct_cone: samples must be nonzero");
    const bool by_s = rank_one_by_S(ev, x);
    const bool truth = segre_rank(x) == 1;
    r.rank_one.push_back(by_s);
    r.ground_truth.push_back(truth);
    if (by_s != truth) ++r.misclassified;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Trajectory export
// ---------------------------------------------------------------------------

struct TrajectoryRow {
  double t = 0.0;
  std::vector<double> values;  // (n+4) x 2 span, row-major
};

/// Euclidean Gram-Schmidt on the two columns, then the first nonzero entry of
/// the first column is made positive.
inline MatF normalize_span(const MatF& span) {
  MatF out = span;
  const std::size_t rows = span.rows();
  auto dot = [&](std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += out(i, a) * out(i, b);
    return s;
  };
  const double n0 = std::sqrt(dot(0, 0));
  for (std::size_t i = 0; i < rows; ++i) out(i, 0) /= n0;
  const double proj = dot(0, 1);
  for (std::size_t i = 0; i < rows; ++i) out(i, 1) -= proj * out(i, 0);
  const double n1 = std::sqrt(dot(1, 1));
  for (std::size_t i = 0; i < rows; ++i) out(i, 1) /= n1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (std::fabs(out(i, 0)) <= 1e-12) continue;
    if (out(i, 0) < 0)
      for (std::size_t j = 0; j < rows; ++j) out(j, 0) = -out(j, 0);
    break;
  }
  return out;
}

/// Samples the chain through g.origin at `steps` equally spaced parameters.
inline std::vector<TrajectoryRow> emit_trajectory(const Signature& s, const MatR& g, const Rat& t_min, const Rat& t_max,
                                                  std::size_t steps) {
  if (steps < 2) throw Error("emit_trajectory: steps must be at least 2");
  std::vector<TrajectoryRow> rows;
  for (std::size_t k = 0; k < steps; ++k) {
    const Rat t = t_min + (t_max - t_min) * Rat(static_cast<long>(k)) / Rat(static_cast<long>(steps - 1));
    const MatF span = normalize_span(to_float(chain_eval(s, g, t).span()));
    rows.push_back({t.get_d(), span.data()});
  }
  return rows;
}

}  // namespace liechains
