#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace eaqecc {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt big_pow(std::int64_t base, std::int64_t exponent);

/// C(n, i) with arbitrary precision; zero when i < 0 or i > n.
BigInt binomial(std::int64_t n, std::int64_t i);

/// Rational from a/b, canonicalized.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Ceiling of a/b for positive b.
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// log2 of a positive integer, accurate to double precision regardless of
/// magnitude (mantissa/exponent split, no overflow for huge values).
double log2_big(const BigInt& value);

/// Decimal rendering truncated toward zero to `places` digits with trailing
/// zeros stripped: 5/12 -> "0.4166", -7/9 -> "-0.7777", 3/4 -> "0.75", 1 -> "1".
std::string truncate_decimal(const Rational& value, int places = 4);

std::string to_string(const BigInt& value);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& value);

int sign(const Rational& value);

} // namespace eaqecc
