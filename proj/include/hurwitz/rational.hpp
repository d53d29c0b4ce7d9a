#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string; accepts optional surrounding whitespace.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Rational pow(const Rational& base, long exponent);

/// Lossy conversion used only when bridging into floating point.
long double to_long_double(const Rational& q);

}  // namespace hurwitz
