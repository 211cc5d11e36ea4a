#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace poincare {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (optionally signed). Throws poincare::Error on bad input.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Exact rational value of a finite double.
Rational rational_from_double(double v);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_rational(double v, long max_den);

}  // namespace poincare
