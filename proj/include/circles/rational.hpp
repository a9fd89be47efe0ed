#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace circles {

using Rational = mpq_class;

// n / d in lowest terms.  mpq_class(n, d) does not reduce, and GMP's
// arithmetic and comparisons assume reduced operands.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Lowest-terms text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" with q != 0; the result is canonicalized.
// Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

int sign(const Rational& q);

// Largest k / 2^bits with k integer and (k / 2^bits)^2 <= value (value >= 0).
Rational sqrt_floor(const Rational& value, unsigned bits);

// Exact square root when value is the square of a rational.
bool exact_sqrt(const Rational& value, Rational& root);

double to_double(const Rational& q);

}  // namespace circles
