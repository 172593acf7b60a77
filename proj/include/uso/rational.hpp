#pragma once

#include <gmpxx.h>
#include <string>

namespace uso {

// Exact arbitrary-precision rational, always kept in canonical form
// (positive denominator, gcd(num, den) = 1). All sign decisions in the
// library go through these; no floating point anywhere.
using Rational = mpq_class;

// Exact sign in {-1, 0, +1}.
inline int sign_of(const Rational& r) { return sgn(r); }

// num/den reduced to canonical form. The two-argument mpq_class
// constructor does not canonicalize; always build fractions through this.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p" with decimal integers. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_to_string(const Rational& r);

// base^exp for integer base, exp >= 0.
Rational rational_pow(long base, unsigned exp);

}  // namespace uso
