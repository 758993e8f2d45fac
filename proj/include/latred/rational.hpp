#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace latred {

// Arbitrary-precision integers and rationals. GMP keeps every mpq_class that
// comes out of an arithmetic operation in canonical form (den > 0, gcd = 1);
// values built from a raw numerator/denominator pair go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q" or "p" with an optional sign; q must be positive. The result
// is canonical even when the literal is not.
Rational parse_rational(std::string_view text);

// Canonical literal: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

// Nearest integer, exact halves go toward -infinity.
Integer round_half_down(const Rational& value);

// Number of bits of |value|; zero has bit length 0.
std::size_t bit_length(const Integer& value);

// max(bits(numerator), bits(denominator)).
std::size_t bit_length(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// g = gcd(a, b) >= 0 with x*a + y*b = g.
struct ExtendedGcd {
  Integer g;
  Integer x;
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Largest integer r with r*r <= value; value must be >= 0.
Integer isqrt(const Integer& value);

}  // namespace latred
