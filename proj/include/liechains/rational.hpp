#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace liechains {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Base class for all contract violations raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw Error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "a", "a/b" or a plain decimal such as "-0.25".
inline Rat parse_rat(const std::string& text) {
  const auto bad = [&] { return Error("parse_rat: not a rational number: '" + text + "'"); };
  std::string s = text;
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw bad();
    const std::string frac = s.substr(dot + 1);
    s = s.substr(0, dot) + frac;
    if (s.empty() || s == "-" || s == "+") throw bad();
    s += "/1" + std::string(frac.size(), '0');
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Exact square root of a non-negative rational, when it is a perfect square.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  const Int& num = r.get_num();
  const Int& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rat out(sn, sd);
  out.canonicalize();
  return out;
}

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace liechains
