#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liechains/matrix.hpp"
#include "liechains/rational.hpp"

namespace liechains {

namespace detail {

/// Integer row echelon form produced by fraction-free (Bareiss) elimination.
/// Each rational row is first cleared of denominators; row scaling changes
/// neither the rank nor the solution set.
struct Echelon {
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

inline std::vector<Int> integer_row(const MatR& m, std::size_t r) {
  Int l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
  std::vector<Int> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m(r, c).get_num() * (l / m(r, c).get_den());
  return out;
}

// Pivot choice: smallest nonzero magnitude in the column, to limit growth.
inline Echelon echelon(const MatR& m) {
  Echelon e;
  e.cols = m.cols();
  std::vector<std::vector<Int>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r] = integer_row(m, r);

  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      if (best == m.rows() || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == m.rows()) continue;
    std::swap(a[r], a[best]);
    const Int piv = a[r][c];
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Int factor = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Int v = piv * a[i][j] - factor * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

// Back substitution on the echelon rows. `fixed` holds preassigned values for
// the non-pivot columns among the first `ncols` columns; `rhs_col` (if any)
// is the augmented column.
inline std::vector<Rat> back_substitute(const Echelon& e, std::size_t ncols, std::vector<Rat> x,
                                        std::optional<std::size_t> rhs_col) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    const std::size_t pc = e.pivot_cols[k];
    Rat s = rhs_col ? Rat(row[*rhs_col]) : Rat(0);
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      if (row[j] != 0) s -= Rat(row[j]) * x[j];
    }
    x[pc] = s / Rat(row[pc]);
  }
  return x;
}

}  // namespace detail

struct RankKernel {
  std::size_t rank = 0;
  std::vector<MatR> kernel_basis;  // column vectors
};

/// Rank and a basis of the right kernel, exactly.
inline RankKernel rank_kernel(const MatR& m) {
  if (m.empty()) throw Error("rank_kernel: empty matrix");
  const detail::Echelon e = detail::echelon(m);
  RankKernel out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(m.cols(), Rat(0));
    x[f] = 1;
    out.kernel_basis.push_back(MatR::column(detail::back_substitute(e, m.cols(), x, std::nullopt)));
  }
  return out;
}

inline std::size_t rank(const MatR& m) { return m.empty() ? 0 : detail::echelon(m).pivot_cols.size(); }

/// Some solution of a·x = b (free variables set to zero), or nullopt when
/// the system is inconsistent. Throws on shape mismatch.
inline std::optional<MatR> solve_linear(const MatR& a, const MatR& b) {
  if (b.cols() != 1) throw Error("solve_linear: right-hand side must be a column");
  if (a.rows() != b.rows()) {
    throw Error("solve_linear: dimension mismatch (" + a.shape() + " vs " + b.shape() + ")");
  }
  const detail::Echelon e = detail::echelon(hstack(a, b));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  return MatR::column(detail::back_substitute(e, a.cols(), x, a.cols()));
}

inline Rat determinant(const MatR& m) {
  if (!m.is_square()) throw Error("determinant: non-square matrix");
  const std::size_t n = m.rows();
  MatR a = m;
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = c; r < n; ++r) {
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rat f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Exact inverse; throws when the matrix is singular.
inline MatR inverse(const MatR& m) {
  if (!m.is_square()) throw Error("inverse: non-square matrix");
  const std::size_t n = m.rows();
  MatR a = hstack(m, MatR::identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = c; r < n; ++r) {
      if (a(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p == n) throw Error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    const Rat inv = 1 / a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return a.block(0, n, n, n);
}

/// Σ_{j<k} m^j / j! for a matrix with m^k = 0, k <= nilpotency_bound.
inline MatR exp_nilpotent(const MatR& m, std::size_t nilpotency_bound) {
  if (!m.is_square()) throw Error("exp_nilpotent: non-square matrix");
  const std::size_t n = m.rows();
  MatR result = MatR::identity(n);
  MatR power = MatR::identity(n);
  Rat factorial = 1;
  for (std::size_t j = 1; j <= nilpotency_bound; ++j) {
    power = power * m;
    if (power.is_zero()) return result;
    factorial *= Rat(static_cast<long>(j));
    result += power * (1 / factorial);
  }
  throw Error("exp_nilpotent: m^" + std::to_string(nilpotency_bound) +
              " is nonzero; matrix is not nilpotent within the given bound");
}

namespace detail {

inline double norm_inf(const MatF& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::fabs(m(i, j));
    best = std::fmax(best, s);
  }
  return best;
}

}  // namespace detail

/// Matrix exponential in double precision by scaling and squaring with a
/// truncated Taylor series on the scaled matrix.
inline MatF exp_float(const MatF& m) {
  if (!m.is_square()) throw Error("exp_float: non-square matrix");
  if (!all_finite(m)) throw Error("exp_float: non-finite input");
  const std::size_t n = m.rows();
  const double norm = detail::norm_inf(m);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const MatF scaled = m * std::ldexp(1.0, -squarings);

  MatF result = MatF::identity(n);
  MatF term = MatF::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled * (1.0 / k);
    result += term;
    if (detail::norm_inf(term) < 1e-18 * detail::norm_inf(result)) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
    if (!all_finite(result)) throw Error("exp_float: overflow");
  }
  if (!all_finite(result)) throw Error("exp_float: overflow");
  return result;
}

}  // namespace liechains
