#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nctorus {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" with decimal digits only. Result is canonical
/// (lowest terms, positive denominator). Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor division and the matching nonnegative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);

/// g = x*a + y*b with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Integer g;
  Integer x;
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Exact square root; throws std::logic_error if value is not a perfect square.
Integer exact_sqrt(const Integer& value);
bool is_perfect_square(const Integer& value);

bool is_integral(const Rational& value);

}  // namespace nctorus
