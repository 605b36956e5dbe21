#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mlc {

// Canonical arbitrary-precision rational (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q"; throws Error(kParseError) on malformed input or
// a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign(const Rational& value) { return sgn(value); }

bool is_integer(const Rational& value);

Integer binomial(unsigned n, unsigned k);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace mlc
