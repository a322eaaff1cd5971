#pragma once

#include <gmpxx.h>

#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "poincare/errors.hpp"

namespace poincare {

/// Exact arbitrary-precision rational scalar. Always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (q > 0 after normalization). Throws InvalidModel on
/// malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/-?[0-9]+)?$)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw InvalidModel("not a rational literal: '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw InvalidModel("not a rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw InvalidModel("zero denominator in rational literal: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

/// Canonical "p" or "p/q" form, lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Lowest-terms copy. GMP arithmetic preserves canonical form but the
/// (num, den) constructor does not establish it, so public entry points
/// normalize what they are handed.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// q^n for n >= 0 by repeated squaring.
inline Rational pow_rational(Rational base, unsigned long n) {
  Rational result(1);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Conversion for values known to fit a signed 64-bit integer.
inline long long to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::invalid_argument("rational is not an integer: " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer does not fit 64 bits: " + to_string(q));
  return q.get_num().get_si();
}

}  // namespace poincare
