#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liechains/chains.hpp"
#include "liechains/extension.hpp"
#include "liechains/linalg.hpp"
#include "liechains/path_sl.hpp"
#include "liechains/sampling.hpp"
#include "liechains/so_contact.hpp"
#include "liechains/split_quat.hpp"

namespace liechains {

/// Outcome of one verified claim.
struct CheckRecord {
  std::string name;
  std::string anchor;  // the claim being certified, in words
  bool pass = true;
  std::size_t trials = 0;
  std::string witness;             // counterexample, set on failure
  std::optional<std::string> detail;  // e.g. a fitted constant
  std::optional<double> max_error;    // float paths only
  std::optional<double> wall_time;

  CheckRecord() = default;
  CheckRecord(std::string name_, std::string anchor_) : name(std::move(name_)), anchor(std::move(anchor_)) {}

  /// Records the first failure only.
  void fail(std::string w) {
    if (!pass) return;
    pass = false;
    witness = std::move(w);
  }
};

inline CheckRecord from_condition(const ConditionResult& c, std::string anchor) {
  CheckRecord r{c.name, std::move(anchor)};
  r.pass = c.pass;
  r.trials = c.trials;
  r.witness = c.witness;
  if (c.max_error > 0.0 || c.name.find("float") != std::string::npos || c.name.find("differences") != std::string::npos)
    r.max_error = c.max_error;
  return r;
}

// ---------------------------------------------------------------------------
// Sample families
// ---------------------------------------------------------------------------

/// u f for random nonzero u (n-vector) and f (row 2-vector).
inline MatR random_rank_one(const Signature& s, Sampler& rng) {
  const MatR u = rng.nonzero_matrix(s.n(), 1);
  const MatR f = rng.nonzero_matrix(1, 2);
  return u * f;
}

inline MatR random_rank_two(const Signature& s, Sampler& rng) {
  for (;;) {
    MatR x = rng.matrix(s.n(), 2);
    if (rank(x) == 2) return x;
  }
}

/// Rank-one x = u f with <u,u> = 0; needs p, q >= 1.
inline std::optional<MatR> isotropic_rank_one(const Signature& s, Sampler& rng) {
  if (s.p < 1 || s.q < 1) return std::nullopt;
  MatR u(s.n(), 1);
  u(0, 0) = 1;
  u(static_cast<std::size_t>(s.p), 0) = 1;
  const MatR f = rng.nonzero_matrix(1, 2);
  return rng.orthogonal_pq(s) * u * f * rng.nonzero_rational();
}

/// Rank-two x whose columns span a totally isotropic plane; needs p, q >= 2.
inline std::optional<MatR> isotropic_rank_two(const Signature& s, Sampler& rng) {
  if (s.p < 2 || s.q < 2) return std::nullopt;
  const std::size_t p = static_cast<std::size_t>(s.p);
  MatR x(s.n(), 2);
  x(0, 0) = 1;
  x(p, 0) = 1;
  x(1, 1) = 1;
  x(p + 1, 1) = 1;
  const MatR c = rng.orthogonal_pq(s);
  return c * x * rng.gl2();
}

/// Mixed samples cycling through generic rank one, generic rank two,
/// isotropic rank one and isotropic rank two (when the signature allows).
inline std::vector<MatR> mixed_samples(const Signature& s, std::size_t count, Sampler& rng) {
  std::vector<MatR> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    switch (k % 4) {
      case 0: out.push_back(random_rank_one(s, rng)); break;
      case 1: out.push_back(random_rank_two(s, rng)); break;
      case 2:
        if (auto x = isotropic_rank_one(s, rng)) out.push_back(*x);
        else out.push_back(random_rank_one(s, rng));
        break;
      default:
        if (auto x = isotropic_rank_two(s, rng)) out.push_back(*x);
        else out.push_back(random_rank_two(s, rng));
        break;
    }
  }
  return out;
}

namespace checks {

// ---------------------------------------------------------------------------
// algebra: so(p+2,q+2) and exact linear algebra
// ---------------------------------------------------------------------------

/// Jacobi identity over all ordered basis triples, via sparse structure
/// constants.
inline CheckRecord jacobi_so(const Signature& s) {
  CheckRecord r{"Jacobi identity on basis triples", "so(p+2,q+2) with the block bracket is a Lie algebra"};
  const auto c = structure_constants(s);
  const std::size_t d = c.size();
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> sparse(d, std::vector<std::vector<std::pair<std::size_t, Rat>>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        if (c[i][j][l] != 0) sparse[i][j].push_back({l, c[i][j][l]});
  // [b_i, [b_j, b_k]] in coordinates
  const auto nested = [&](std::size_t i, std::size_t j, std::size_t k, std::vector<Rat>& acc, const Rat& sgn) {
    for (const auto& [l, a] : sparse[j][k])
      for (const auto& [m, b] : sparse[i][l]) acc[m] += sgn * a * b;
  };
  std::vector<Rat> acc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), Rat(0));
        nested(i, j, k, acc, 1);
        nested(j, k, i, acc, 1);
        nested(k, i, j, acc, 1);
        ++r.trials;
        for (const auto& v : acc)
          if (v != 0) {
            r.fail("basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            break;
          }
      }
  return r;
}

inline CheckRecord grading_so(const Signature& s) {
  CheckRecord r{"bracket respects the grading", "[g_i, g_j] lies in g_{i+j}"};
  const auto basis = so_basis(s);
  const auto deg = so_basis_degrees(s);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++r.trials;
      const SoElement b = bracket(basis[i], basis[j]);
      const int target = deg[i] + deg[j];
      const bool ok = (target < -2 || target > 2) ? b.is_zero() : b == b.grade(target);
      if (!ok) r.fail("basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return r;
}

inline CheckRecord levi_closed_form(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"Levi bracket closed form", "[X,Y] = (<X1,Y2> - <X2,Y1>) e on g_-1"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR x = rng.matrix(s.n(), 2);
    const MatR y = rng.matrix(s.n(), 2);
    const SoElement b = bracket(SoElement::from_gm1(s, x), SoElement::from_gm1(s, y));
    if (!(b == bracket_gm1(s, x, y) * SoElement::e(s))) r.fail("X=" + describe(x) + " Y=" + describe(y));
  }
  return r;
}

inline CheckRecord levi_orthogonal(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"Levi bracket is O(p,q)-invariant", "[CX,CY] = [X,Y] for C in O(p,q)"};
  r.trials = trials;
  const MatR id2 = MatR::identity(2);
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR c = rng.orthogonal_pq(s);
    const MatR x = rng.matrix(s.n(), 2);
    const MatR y = rng.matrix(s.n(), 2);
    if (equivariance_checks(s, c, id2, x, y).orthogonal != 0) r.fail("C=" + describe(c) + " X=" + describe(x) + " Y=" + describe(y));
  }
  return r;
}

inline CheckRecord levi_determinant(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"Levi bracket scales by det", "[XA,YA] = det A [X,Y] for A in gl(2)"};
  r.trials = trials;
  const MatR idn = MatR::identity(s.n());
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR a = rng.matrix(2, 2);
    const MatR x = rng.matrix(s.n(), 2);
    const MatR y = rng.matrix(s.n(), 2);
    if (equivariance_checks(s, idn, a, x, y).determinant != 0) r.fail("A=" + describe(a) + " X=" + describe(x) + " Y=" + describe(y));
  }
  return r;
}

inline CheckRecord levi_nondegenerate(const Signature& s) {
  CheckRecord r{"Levi bracket is nondegenerate", "every nonzero X in g_-1 pairs nontrivially with some Y"};
  const std::size_t n = s.n();
  for (std::size_t k = 0; k < 2 * n; ++k) {
    ++r.trials;
    MatR x(n, 2);
    x(k % n, k / n) = 1;
    bool found = false;
    for (std::size_t l = 0; l < 2 * n && !found; ++l) {
      MatR y(n, 2);
      y(l % n, l / n) = 1;
      found = bracket_gm1(s, x, y) != 0;
    }
    if (!found) r.fail("basis vector " + std::to_string(k));
  }
  return r;
}

inline CheckRecord g0_adjoint(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"G0 adjoint action formula", "Ad(B,C)(z,X) = (z / det B, C X B^-1), independent of sign"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const G0Element g = rng.g0_element(s);
    SoElement x = SoElement::from_gm1(s, rng.matrix(s.n(), 2));
    x.z = rng.rational();
    const auto [z2, x2] = ad_g0(g, x.z, x.X);
    const auto [z3, x3] = ad_g0(g.negated(), x.z, x.X);
    SoElement expect = SoElement::from_gm1(s, x2);
    expect.z = z2;
    if (!(adjoint(s, g.matrix(), x) == expect) || z2 != z3 || x2 != x3) r.fail("B=" + describe(g.B) + " C=" + describe(g.C));
  }
  return r;
}

inline CheckRecord rank_nullity(std::size_t trials, Sampler& rng) {
  CheckRecord r{"rank plus kernel dimension equals columns", "exact elimination is consistent"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 12));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 12));
    const auto inner_dim = static_cast<std::size_t>(rng.integer(1, 12));
    const MatR m = rng.matrix(rows, inner_dim, 3, 3) * rng.matrix(inner_dim, cols, 3, 3);
    const RankKernel rk = rank_kernel(m);
    bool ok = rk.rank + rk.kernel_basis.size() == cols && rk.rank <= std::min({rows, cols, inner_dim});
    for (const auto& v : rk.kernel_basis) ok = ok && (m * v).is_zero();
    if (!rk.kernel_basis.empty()) {
      MatR k = rk.kernel_basis[0];
      for (std::size_t i = 1; i < rk.kernel_basis.size(); ++i) k = hstack(k, rk.kernel_basis[i]);
      ok = ok && rank(k) == rk.kernel_basis.size();
    }
    if (!ok) r.fail("m=" + describe(m));
  }
  return r;
}

inline CheckRecord solve_consistent(std::size_t trials, Sampler& rng) {
  CheckRecord r{"solve reproduces the right-hand side", "exact solutions of consistent systems"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 10));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 10));
    const MatR a = rng.matrix(rows, cols);
    const MatR b = a * rng.matrix(cols, 1);
    const auto x = solve_linear(a, b);
    if (!x || a * *x != b) r.fail("a=" + describe(a) + " b=" + describe(b));
  }
  return r;
}

inline CheckRecord exp_nilpotent_inverse(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"nilpotent exponential inverse", "exp(m) exp(-m) = I for nilpotent m"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    SoElement x = SoElement::zero(s);
    if (t % 2 == 0) {
      x.z = rng.rational();
      x.X = rng.matrix(s.n(), 2);
    } else {
      x.w = rng.rational();
      x.U = rng.matrix(2, s.n());
    }
    const MatR m = x.matrix();
    if (exp_nilpotent(m, 5) * exp_nilpotent(-m, 5) != MatR::identity(s.dim_ambient())) r.fail("m=" + describe(m));
  }
  return r;
}

inline CheckRecord exp_float_agrees(const Signature& s, std::size_t trials, Sampler& rng, double tolerance = 1e-12) {
  CheckRecord r{"float exponential agrees on nilpotent input", "scaling and squaring matches the exact series"};
  r.trials = trials;
  r.max_error = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    SoElement x = SoElement::zero(s);
    x.z = rng.rational(2, 2);
    x.X = rng.matrix(s.n(), 2, 2, 2);
    const MatR m = x.matrix();
    const double err = max_abs_diff(exp_float(to_float(m)), to_float(exp_nilpotent(m, 5)));
    *r.max_error = std::fmax(*r.max_error, err);
    if (!(err <= tolerance)) r.fail("m=" + describe(m) + " error=" + std::to_string(err));
  }
  return r;
}

// ---------------------------------------------------------------------------
// quaternion: split quaternions acting on g_-1
// ---------------------------------------------------------------------------

inline SplitQuaternion random_quaternion(Sampler& rng) {
  SplitQuaternion q;
  q.a0 = rng.rational();
  q.a = rng.rational();
  q.b = rng.rational();
  q.c = rng.rational();
  return q;
}

inline CheckRecord quat_multiplicative(std::size_t trials, Sampler& rng) {
  CheckRecord r{"matrix model is an algebra isomorphism", "split quaternions are the 2x2 real matrices"};
  r.trials = trials;
  if (!QuatStructure::standard().satisfies_relations()) r.fail("standard i, j, k violate the relations");
  for (std::size_t t = 0; t < trials; ++t) {
    const SplitQuaternion p = random_quaternion(rng);
    const SplitQuaternion q = random_quaternion(rng);
    const bool mult = to_matrix(quat_mul(p, q)) == to_matrix(p) * to_matrix(q);
    const bool inj = quat_from_matrix(to_matrix(p)) == p;
    if (!mult || !inj) r.fail("p=" + describe(to_matrix(p)) + " q=" + describe(to_matrix(q)));
  }
  return r;
}

inline CheckRecord quat_norm_is_det(std::size_t trials, Sampler& rng) {
  CheckRecord r{"norm is the determinant", "|q|^2 = det of the matrix model; norms of i, j, k are -1, -1, 1"};
  r.trials = trials;
  if (SplitQuaternion::i().norm2() != -1 || SplitQuaternion::j().norm2() != -1 || SplitQuaternion::k().norm2() != 1)
    r.fail("norms of the imaginary units");
  for (std::size_t t = 0; t < trials; ++t) {
    const SplitQuaternion q = random_quaternion(rng);
    if (q.norm2() != determinant(to_matrix(q))) r.fail("q=" + describe(to_matrix(q)));
  }
  return r;
}

inline CheckRecord quat_rank_one_witness(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"rank one iff fixed by a product structure",
                "x has rank one exactly when A x = x for some A with |A|^2 = -1"};
  r.trials = trials;
  const auto samples = mixed_samples(s, trials, rng);
  for (const auto& x : samples) {
    const auto w = rank_one_witness(x);
    bool ok = w.has_value() == (segre_rank(x) == 1);
    if (w) ok = ok && quat_norm2(w->a, w->b, w->c) == -1 && act_on_h(w->a, w->b, w->c, x) == x;
    if (!ok) r.fail("x=" + describe(x));
  }
  return r;
}

inline CheckRecord quat_levi_compatible(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"Levi bracket is compatible with the structure", "[Ax, Ay] = |A|^2 [x, y] for imaginary A"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
    const MatR x = rng.matrix(s.n(), 2);
    const MatR y = rng.matrix(s.n(), 2);
    if (levi_compat_residual(s, a, b, c, x, y) != 0) r.fail("x=" + describe(x) + " y=" + describe(y));
  }
  return r;
}

inline CheckRecord quat_max_subspaces(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"maximal cone subspaces are isotropic",
                "maps with a common kernel line form an n-dimensional isotropic subspace of rank-one elements"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR l = rng.nonzero_matrix(2, 1);
    const MaxSubspace w = max_subspace_for_line(l, s.n());
    const auto& q = w.reflection;
    bool ok = w.basis.size() == s.n() && quat_norm2(q.a, q.b, q.c) == -1 && q.a0 == 0;
    for (std::size_t i = 0; i < w.basis.size(); ++i) {
      ok = ok && segre_rank(w.basis[i]) == 1 && (w.basis[i] * l).is_zero() &&
           act_on_h(q.a, q.b, q.c, w.basis[i]) == w.basis[i];
      for (std::size_t j = 0; j < w.basis.size(); ++j) ok = ok && bracket_gm1(s, w.basis[i], w.basis[j]) == 0;
    }
    if (!ok) r.fail("l=" + describe(l));
  }
  return r;
}

inline CheckRecord quat_eigenspaces(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"eigenspaces recover the tensor decomposition",
                "I has n-dimensional isotropic eigenspaces and H+ + J H+ spans g_-1"};
  r.trials = trials;
  const std::size_t n = s.n();
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR g = t == 0 ? MatR::identity(2) : rng.gl2();
    const QuatStructure st = QuatStructure::standard().conjugated(g);
    const EigenDecomposition e = eigenspace_decompose(st, n);
    bool ok = e.plus.size() == n && e.minus.size() == n;
    MatR span(2 * n, 0);
    for (const auto& v : e.plus) {
      for (const auto& u : e.plus) ok = ok && bracket_gm1(s, v, u) == 0;
      span = hstack(span, stack_columns(v));
    }
    for (const auto& v : e.plus) span = hstack(span, stack_columns(v * st.j));
    ok = ok && rank(span) == 2 * n;
    if (!ok) r.fail("g=" + describe(g));
  }
  return r;
}

// ---------------------------------------------------------------------------
// extension: the pair (i, alpha) and the obstruction Psi
// ---------------------------------------------------------------------------

inline CheckRecord hat_lift_section(const ExtensionPair& pair, std::size_t trials, Sampler& rng) {
  const Signature& s = pair.signature();
  CheckRecord r{"hat lift inverts alpha on g_- + g_1", "alpha(hat Z) = Z mod p~ and hat alpha(u) = u"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    SoElement u = SoElement::zero(s);
    u.z = rng.rational();
    u.X = rng.matrix(s.n(), 2);
    u.U = rng.matrix(2, s.n());
    const SlElement z = from_minus_coordinates(s.n(), rng.matrix(4 * s.n() + 1, 1));
    const bool ok = pair.hat_lift(alpha(u)) == u && minus_coordinates(alpha(pair.hat_lift(z))) == minus_coordinates(z);
    if (!ok) r.fail("u=" + describe(u));
  }
  return r;
}

inline CheckRecord psi_support(const ExtensionPair& pair) {
  CheckRecord r{"Psi is supported on g-1V x g-2 with values in sl(2n)",
                "Psi vanishes off the pairs (g-1V, g-2) and takes trace-free lower-block values"};
  const std::size_t n = pair.n();
  const auto basis = sl_minus_basis(n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      ++r.trials;
      const SlElement v = pair.psi(basis_element(n, basis[a]), basis_element(n, basis[b]));
      const bool allowed = (basis[a].slot == Slot::Minus1V && basis[b].slot == Slot::Minus2) ||
                           (basis[a].slot == Slot::Minus2 && basis[b].slot == Slot::Minus1V);
      const bool ok = allowed ? in_g0_semisimple(v) : v.is_zero();
      if (!ok) r.fail("pair (" + basis[a].label + "," + basis[b].label + ") value " + describe(v.matrix()));
    }
  return r;
}

/// Fits c on the first nondegenerate triple, then requires psi_trilinear =
/// c * symmetrized reference on `trials` further triples.
inline CheckRecord psi_symmetrization(const ExtensionPair& pair, std::size_t trials, Sampler& rng) {
  const Signature& s = pair.signature();
  CheckRecord r{"trilinear map is the symmetrized reference",
                "(X,Y,Z) -> [Psi(X,[Y,W0]),Z] is a fixed multiple of the full symmetrization"};
  const std::size_t dim = 2 * s.n();
  std::optional<Rat> c;
  while (!c) {
    const MatR x = rng.matrix(dim, 1), y = rng.matrix(dim, 1), z = rng.matrix(dim, 1);
    const MatR ref = symmetrized_reference(s, x, y, z);
    if (ref.is_zero()) continue;
    c = proportionality(psi_trilinear(pair, x, y, z), ref);
    if (!c || *c == 0) {
      r.fail("fit triple is not proportional: x=" + describe(x) + " y=" + describe(y) + " z=" + describe(z));
      return r;
    }
  }
  r.detail = "c* = " + c->get_str();
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR x = rng.matrix(dim, 1), y = rng.matrix(dim, 1), z = rng.matrix(dim, 1);
    if (psi_trilinear(pair, x, y, z) != symmetrized_reference(s, x, y, z) * *c)
      r.fail("x=" + describe(x) + " y=" + describe(y) + " z=" + describe(z));
  }
  return r;
}

inline CheckRecord psi_r_block(const ExtensionPair& pair, std::size_t trials, Sampler& rng) {
  const Signature& s = pair.signature();
  CheckRecord r{"R-block formula matches Psi", "the value block of Psi(X,[Y,W0]) is assembled from R11, R12, R21, R22"};
  r.trials = trials;
  const std::size_t dim = 2 * s.n();
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR x = rng.matrix(dim, 1), y = rng.matrix(dim, 1);
    const SlElement yv = sl_bracket(SlElement::from_minus2(y), w0(s.n()));
    const SlElement v = pair.psi(SlElement::from_minus2(x), yv);
    if (v.lower_block() != r_block(s, x, y)) r.fail("x=" + describe(x) + " y=" + describe(y));
  }
  return r;
}

inline CheckRecord psi_q_equivariant(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"Psi is Q-equivariant and factors through g/q",
                "Ad(i(h)) Psi(x,y) = Psi(Ad(h)x, Ad(h)y), and Psi(xi, y) = 0 for xi in q"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const QGroupElement h = rng.q_element(s, true);
    const SoElement x = rng.so_element(s);
    const SoElement y = rng.so_element(s);
    const MatR hm = h.matrix();
    const MatR hinv = inverse(hm);
    const MatR ih = i_map(h);
    const SoElement hx = SoElement::from_matrix(s, hm * x.matrix() * hinv);
    const SoElement hy = SoElement::from_matrix(s, hm * y.matrix() * hinv);
    const bool equiv = ih * psi_general(x, y).matrix() * inverse(ih) == psi_general(hx, hy).matrix();
    SoElement xi = x.grade(0);
    xi.w = x.w;
    const bool factors = psi_general(xi, y).is_zero();
    if (!equiv || !factors) r.fail("h=" + describe(h) + " x=" + describe(x) + " y=" + describe(y));
  }
  return r;
}

inline CheckRecord psi_curvature(const ExtensionPair& pair) {
  CheckRecord r{"Psi is torsion-free, regular, nonzero, of homogeneity 3",
                "the induced curvature of the flat model is torsion-free and non-flat with homogeneity three"};
  r.trials = 1;
  const CurvatureReport rep = curvature_report(psi_cochain(pair));
  std::string hs;
  for (int h : rep.homogeneities) hs += (hs.empty() ? "" : ",") + std::to_string(h);
  r.detail = "homogeneities {" + hs + "}";
  if (!(rep.homogeneities == std::set<int>{3} && rep.torsion_free && rep.regular && rep.nonzero))
    r.fail("homogeneities {" + hs + "} torsion_free=" + std::to_string(rep.torsion_free) +
           " regular=" + std::to_string(rep.regular) + " nonzero=" + std::to_string(rep.nonzero));
  return r;
}

// ---------------------------------------------------------------------------
// normality
// ---------------------------------------------------------------------------

inline CheckRecord codifferential_of_psi(const ExtensionPair& pair) {
  CheckRecord r{"codifferential of Psi_alpha", "the induced geometry is normal: the codifferential of Psi vanishes"};
  r.trials = 1;
  const Cochain1 d = codifferential(psi_cochain(pair));
  if (!d.is_zero()) {
    const auto basis = sl_minus_basis(pair.n());
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (!d.get(a).is_zero()) {
        r.fail("nonzero component at " + basis[a].label + ": " + describe(d.get(a).matrix()));
        break;
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

inline CheckRecord chain_exponential(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"chain exponential is affine", "E^2 = 0, so exp(tE) = I + tE"};
  r.trials = trials;
  const MatR e = e_matrix(s);
  const MatR id = MatR::identity(s.dim_ambient());
  if (!(e * e).is_zero()) r.fail("E^2 != 0");
  for (std::size_t t = 0; t < trials; ++t) {
    const Rat tt = rng.rational();
    if (exp_nilpotent(e * tt, 2) != id + e * tt) r.fail("t=" + to_string(tt));
  }
  return r;
}

inline CheckRecord chain_identity_closed_form(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"standard chain closed form", "the chain through the origin is span{e1 - t e_{n+4}, e2 + t e_{n+3}}"};
  r.trials = trials;
  const std::size_t n = s.n();
  const MatR id = MatR::identity(s.dim_ambient());
  for (std::size_t t = 0; t < trials; ++t) {
    const Rat tt = rng.rational();
    MatR expect(n + 4, 2);
    expect(0, 0) = 1;
    expect(n + 3, 0) = -tt;
    expect(1, 1) = 1;
    expect(n + 2, 1) = tt;
    if (chain_eval(s, id, tt).span() != expect) r.fail("t=" + to_string(tt));
  }
  return r;
}

inline CheckRecord chain_isotropy(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"chain points are isotropic planes", "g exp(tE) P is a point of the model for every t"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR g = rng.group_element(s);
    const Rat tt = rng.rational();
    try {
      const ModelPoint pt = chain_eval(s, g, tt);
      if (!pt.isotropy_residual().is_zero()) r.fail("g=" + describe(g) + " t=" + to_string(tt));
    } catch (const Error& e) {
      r.fail(std::string(e.what()) + " g=" + describe(g) + " t=" + to_string(tt));
    }
  }
  return r;
}

inline CheckRecord chain_equivariance(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"chains are G-equivariant", "chain(g h, t) = g . chain(h, t)"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR g = rng.group_element(s);
    const MatR h = rng.group_element(s);
    const Rat tt = rng.rational();
    const ModelPoint lhs = chain_eval(s, g * h, tt);
    const ModelPoint rhs = act(g, chain_eval(s, h, tt));
    if (!(lhs == rhs) || lhs.span() != rhs.span()) r.fail("g=" + describe(g) + " h=" + describe(h) + " t=" + to_string(tt));
  }
  return r;
}

inline CheckRecord chain_transverse(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"chains are transverse to the contact distribution",
                "the velocity class of a chain has nonzero g_-2 part; curves along g_-1 have none"};
  r.trials = trials;
  const MatR id = MatR::identity(s.dim_ambient());
  for (std::size_t t = 0; t < trials; ++t) {
    const Rat tt = rng.rational();
    const MatR g = t == 0 ? id : rng.group_element(s);
    const SoElement v = velocity_class(s, g, SoElement::e(s), tt);
    const SoElement x = SoElement::from_gm1(s, rng.nonzero_matrix(s.n(), 2));
    const SoElement vx = velocity_class(s, id, x, tt);
    const bool ok = chain_transversality(s, tt) && is_transverse(v) && v == SoElement::e(s) && !is_transverse(vx) &&
                    vx.grade(-1) == x;
    if (!ok) r.fail("g=" + describe(g) + " t=" + to_string(tt));
  }
  return r;
}

inline CheckRecord q_stabilizes_origin(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"Q fixes the origin", "elements of Q stabilize the standard isotropic plane"};
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const QGroupElement h = rng.q_element(s, false);
    bool ok = in_orthogonal_group(s, h.matrix()) && act(h.matrix(), origin(s)) == origin(s);
    // Ad(h) preserves the filtration: e maps to e / det B modulo g^{-1},
    // and g^{-1} itself is stable.
    const SoElement he = adjoint(s, h.matrix(), SoElement::e(s));
    const SoElement hx = adjoint(s, h.matrix(), SoElement::from_gm1(s, rng.matrix(s.n(), 2)));
    ok = ok && he.z == 1 / h.beta() && hx.z == 0;
    if (!ok) r.fail("h=" + describe(h));
  }
  return r;
}

// ---------------------------------------------------------------------------
// reconstruction: the S tensor and the Segre cone
// ---------------------------------------------------------------------------

inline CheckRecord s_symmetric(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"S is totally symmetric", "S(x,y,z) is invariant under all permutations"};
  r.trials = trials;
  const STensorEval ev(s);
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2), z = rng.matrix(s.n(), 2);
    const MatR v = s_tensor(ev, x, y, z);
    const bool ok = v == s_tensor(ev, y, x, z) && v == s_tensor(ev, x, z, y) && v == s_tensor(ev, z, y, x) &&
                    v == s_tensor(ev, y, z, x) && v == s_tensor(ev, z, x, y);
    if (!ok) r.fail("x=" + describe(x) + " y=" + describe(y) + " z=" + describe(z));
  }
  return r;
}

inline CheckRecord s_dual_path(const ExtensionPair& pair, std::size_t trials, Sampler& rng) {
  const Signature& s = pair.signature();
  CheckRecord r{"closed-form S is a multiple of the curvature pipeline",
                "S built from the Levi bracket and I, J, K agrees with the trilinear map from Psi"};
  const STensorEval ev(s);
  std::optional<Rat> c;
  while (!c) {
    const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2), z = rng.matrix(s.n(), 2);
    const MatR pipe = s_tensor_pipeline(pair, x, y, z);
    if (pipe.is_zero()) continue;
    c = proportionality(s_tensor(ev, x, y, z), pipe);
    if (!c || *c == 0) {
      r.fail("fit triple is not proportional: x=" + describe(x) + " y=" + describe(y) + " z=" + describe(z));
      return r;
    }
  }
  r.detail = "c** = " + c->get_str();
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2), z = rng.matrix(s.n(), 2);
    if (s_tensor(ev, x, y, z) != s_tensor_pipeline(pair, x, y, z) * *c)
      r.fail("x=" + describe(x) + " y=" + describe(y) + " z=" + describe(z));
  }
  return r;
}

inline CheckRecord s_classification(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"S detects the Segre cone", "rank_one_by_S agrees with the exact rank, including isotropic samples"};
  const auto samples = mixed_samples(s, trials, rng);
  const ConeReport rep = reconstruct_cone(STensorEval(s), samples);
  r.trials = samples.size();
  r.detail = std::to_string(rep.misclassified) + " misclassified";
  for (std::size_t k = 0; k < samples.size(); ++k)
    if (rep.rank_one[k] != rep.ground_truth[k]) {
      r.fail("x=" + describe(samples[k]));
      break;
    }
  return r;
}

inline CheckRecord s_max_subspace(const Signature& s, std::size_t trials, Sampler& rng) {
  CheckRecord r{"maximal cone subspaces are classified rank one", "S recognizes every element of W_l as rank one"};
  r.trials = trials;
  const STensorEval ev(s);
  for (std::size_t t = 0; t < trials; ++t) {
    const MatR l = rng.nonzero_matrix(2, 1);
    const MaxSubspace w = max_subspace_for_line(l, s.n());
    MatR combo(s.n(), 2);
    for (const auto& b : w.basis) combo += b * rng.rational();
    std::vector<MatR> samples = w.basis;
    if (!combo.is_zero()) samples.push_back(combo);
    const ConeReport rep = reconstruct_cone(ev, samples);
    for (bool b : rep.rank_one)
      if (!b) r.fail("l=" + describe(l));
  }
  return r;
}

inline CheckRecord s_invariance(const Signature& s, std::size_t trials, std::size_t samples_per_trial, Sampler& rng) {
  CheckRecord r{"classification ignores scale and quaternion basis",
                "rescaling S or changing the admissible basis I, J, K changes S by a constant and no classification"};
  r.trials = trials;
  const STensorEval base(s);
  for (std::size_t t = 0; t < trials; ++t) {
    const Rat scale = rng.nonzero_rational();
    const MatR g = rng.unimodular2();
    const STensorEval ev(s, scale, QuatStructure::standard().conjugated(g));
    const auto samples = mixed_samples(s, samples_per_trial, rng);
    const ConeReport a = reconstruct_cone(base, samples);
    const ConeReport b = reconstruct_cone(ev, samples);
    bool ok = a.rank_one == b.rank_one && b.misclassified == 0;
    const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2), z = rng.matrix(s.n(), 2);
    const MatR sb = s_tensor(base, x, y, z);
    const MatR se = s_tensor(ev, x, y, z);
    if (!sb.is_zero()) {
      const auto c = proportionality(se, sb);
      ok = ok && c.has_value() && *c == scale;
    }
    if (!ok) r.fail("scale=" + to_string(scale) + " g=" + describe(g));
  }
  return r;
}

inline CheckRecord s_nonzero(const Signature& s) {
  CheckRecord r{"S is not identically zero", "the harmonic curvature of the chain geometry does not vanish"};
  r.trials = 1;
  try {
    require_nondegenerate(STensorEval(s));
  } catch (const Error& e) {
    r.fail(e.what());
  }
  return r;
}

}  // namespace checks
}  // namespace liechains
