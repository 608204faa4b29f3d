#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fsdim {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonicalized p/q. Throws Error(InvalidArgument) when q == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses a decimal integer with optional sign.
Integer parse_integer(std::string_view text);

/// Parses "P/Q" or "P" (non-negative or negative integers).
Rational parse_rational(std::string_view text);

/// b^e as an exact integer.
Integer int_pow(unsigned base, std::size_t exponent);

/// b^{-n} as an exact rational.
Rational inverse_power(unsigned base, std::size_t n);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Smallest integer >= r.
Integer ceil(const Rational& r);

double to_double(const Rational& r);

}  // namespace fsdim
