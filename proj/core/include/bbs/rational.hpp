#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bbs {

// Exact rationals. GMP keeps every value canonical: gcd(num, den) = 1,
// den > 0, and zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Accepts "[-+]digits" or "[-+]digits/digits" with a positive denominator.
Rational parse_rational(std::string_view text);

}  // namespace bbs
