#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "liechains/matrix.hpp"
#include "liechains/rational.hpp"

namespace liechains {

/// Grading slots of sl(2n+2) for the block sizes (1, 1, 2n):
///
///   [ g0     g1E    g2  ]
///   [ g-1E   g0     g1V ]
///   [ g-2    g-1V   g0  ]
enum class Slot { Minus2, Minus1E, Minus1V, Zero, Plus1E, Plus1V, Plus2 };

inline constexpr std::array<Slot, 7> kAllSlots{Slot::Minus2, Slot::Minus1E, Slot::Minus1V, Slot::Zero,
                                               Slot::Plus1E, Slot::Plus1V, Slot::Plus2};

inline int slot_degree(Slot s) {
  switch (s) {
    case Slot::Minus2: return -2;
    case Slot::Minus1E:
    case Slot::Minus1V: return -1;
    case Slot::Zero: return 0;
    case Slot::Plus1E:
    case Slot::Plus1V: return 1;
    case Slot::Plus2: return 2;
  }
  return 0;
}

inline const char* slot_name(Slot s) {
  switch (s) {
    case Slot::Minus2: return "g-2";
    case Slot::Minus1E: return "g-1E";
    case Slot::Minus1V: return "g-1V";
    case Slot::Zero: return "g0";
    case Slot::Plus1E: return "g1E";
    case Slot::Plus1V: return "g1V";
    case Slot::Plus2: return "g2";
  }
  return "?";
}

namespace detail {
inline int block_of(std::size_t i) { return i == 0 ? 0 : (i == 1 ? 1 : 2); }
}  // namespace detail

/// Slot of the matrix entry (row, col).
inline Slot slot_of(std::size_t row, std::size_t col) {
  static constexpr Slot table[3][3] = {{Slot::Zero, Slot::Plus1E, Slot::Plus2},
                                       {Slot::Minus1E, Slot::Zero, Slot::Plus1V},
                                       {Slot::Minus2, Slot::Minus1V, Slot::Zero}};
  return table[detail::block_of(row)][detail::block_of(col)];
}

inline int entry_degree(std::size_t row, std::size_t col) { return slot_degree(slot_of(row, col)); }

/// Element of sl(2n+2, R) with the (1, 1, 2n) grading.
class SlElement {
 public:
  SlElement() = default;
  explicit SlElement(std::size_t n) : n_(n), m_(2 * n + 2, 2 * n + 2) {}
  SlElement(std::size_t n, MatR m) : n_(n), m_(std::move(m)) {
    if (m_.rows() != 2 * n + 2 || m_.cols() != 2 * n + 2) throw Error("SlElement: wrong size");
    if (m_.trace() != 0) throw Error("SlElement: trace must vanish");
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return 2 * n_ + 2; }
  const MatR& matrix() const { return m_; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  bool is_zero() const { return m_.is_zero(); }

  /// The g-2 component as a 2n-vector (first column below row 1).
  MatR minus2_vector() const { return m_.block(2, 0, 2 * n_, 1); }
  /// The g-1V component as a 2n-vector (second column below row 1).
  MatR minus1v_vector() const { return m_.block(2, 1, 2 * n_, 1); }
  /// Lower-right 2n x 2n block.
  MatR lower_block() const { return m_.block(2, 2, 2 * n_, 2 * n_); }

  static SlElement from_minus2(const MatR& v) {
    const std::size_t n = v.rows() / 2;
    SlElement x(n);
    x.m_.set_block(2, 0, v);
    return x;
  }
  static SlElement from_minus1v(const MatR& v) {
    const std::size_t n = v.rows() / 2;
    SlElement x(n);
    x.m_.set_block(2, 1, v);
    return x;
  }

  friend SlElement operator+(const SlElement& a, const SlElement& b) { return SlElement(a.n_, a.m_ + b.m_); }
  friend SlElement operator-(const SlElement& a, const SlElement& b) { return SlElement(a.n_, a.m_ - b.m_); }
  friend SlElement operator*(const Rat& s, const SlElement& a) { return SlElement(a.n_, a.m_ * s); }
  friend bool operator==(const SlElement& a, const SlElement& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  std::size_t n_ = 0;
  MatR m_;
};

inline SlElement sl_bracket(const SlElement& x, const SlElement& y) {
  if (x.n() != y.n()) throw Error("sl_bracket: dimension mismatch");
  return SlElement(x.n(), commutator(x.matrix(), y.matrix()));
}

/// Component in a single slot. Projections onto the two g0 diagonal scalars
/// and the lower block are grouped together, so the result may carry trace
/// only when the input had it (never for sl elements).
inline MatR slot_project_matrix(const MatR& m, Slot s) {
  MatR out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (slot_of(i, j) == s) out(i, j) = m(i, j);
  return out;
}

inline SlElement slot_project(const SlElement& x, Slot s) { return SlElement(x.n(), slot_project_matrix(x.matrix(), s)); }

/// Degree-d component (both E and V slots for |d| = 1).
inline SlElement grade_project(const SlElement& x, int d) {
  MatR out(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (entry_degree(i, j) == d) out(i, j) = x(i, j);
  return SlElement(x.n(), out);
}

/// Lowest degree present among nonzero entries (or nullopt-like 3 when zero).
inline int min_degree(const MatR& m) {
  int d = 3;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && entry_degree(i, j) < d) d = entry_degree(i, j);
  return d;
}

/// W0: the unit element of g1E, entry (1,2) in one-based indexing.
inline SlElement w0(std::size_t n) {
  MatR m(2 * n + 2, 2 * n + 2);
  m(0, 1) = 1;
  return SlElement(n, m);
}

/// True when x lies in the semisimple part of g0: only the lower 2n x 2n
/// block is nonzero and its trace vanishes.
inline bool in_g0_semisimple(const SlElement& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if ((i < 2 || j < 2) && x(i, j) != 0) return false;
  return x.lower_block().trace() == 0;
}

/// Trace-free 2n x 2n lower block viewed as sl(2n), with its n x n quadrants.
struct SsPart {
  MatR block;
  MatR q11() const { return block.block(0, 0, block.rows() / 2, block.rows() / 2); }
  MatR q12() const { return block.block(0, block.rows() / 2, block.rows() / 2, block.rows() / 2); }
  MatR q21() const { return block.block(block.rows() / 2, 0, block.rows() / 2, block.rows() / 2); }
  MatR q22() const { return block.block(block.rows() / 2, block.rows() / 2, block.rows() / 2, block.rows() / 2); }
};

inline SsPart ss_part(const SlElement& x) {
  if (!in_g0_semisimple(x)) throw Error("ss_part: element is not in the semisimple part of g0");
  return SsPart{x.lower_block()};
}

/// One basis entry of the negative part g~_- = g-1E + g-1V + g-2.
struct MinusBasisEntry {
  Slot slot;
  std::size_t row;
  std::size_t col;
  std::string label;
};

/// Basis of g~_- in the order: g-1E, g-1V (2n entries), g-2 (2n entries).
inline std::vector<MinusBasisEntry> sl_minus_basis(std::size_t n) {
  std::vector<MinusBasisEntry> b;
  b.push_back({Slot::Minus1E, 1, 0, "E"});
  for (std::size_t k = 0; k < 2 * n; ++k) b.push_back({Slot::Minus1V, 2 + k, 1, "V" + std::to_string(k)});
  for (std::size_t k = 0; k < 2 * n; ++k) b.push_back({Slot::Minus2, 2 + k, 0, "M" + std::to_string(k)});
  return b;
}

inline SlElement basis_element(std::size_t n, const MinusBasisEntry& e) {
  MatR m(2 * n + 2, 2 * n + 2);
  m(e.row, e.col) = 1;
  return SlElement(n, m);
}

/// Dual element in p~_+ under the trace form tr(xy): the transposed unit.
inline SlElement dual_element(std::size_t n, const MinusBasisEntry& e) {
  MatR m(2 * n + 2, 2 * n + 2);
  m(e.col, e.row) = 1;
  return SlElement(n, m);
}

}  // namespace liechains
