#include "eaqecc/numeric.hpp"

#include <cmath>

#include "eaqecc/errors.hpp"

namespace eaqecc {

BigInt big_pow(std::int64_t base, std::int64_t exponent)
{
    if (exponent < 0)
        throw PreconditionFailure("big_pow: negative exponent");
    BigInt result;
    BigInt b = static_cast<long>(base);
    mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
    return result;
}

BigInt binomial(std::int64_t n, std::int64_t i)
{
    if (n < 0 || i < 0 || i > n)
        return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    return result;
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw PreconditionFailure("make_rational: zero denominator");
    Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

double log2_big(const BigInt& value)
{
    if (sgn(value) <= 0)
        throw PreconditionFailure("log2_big: argument must be positive");
    long exponent = 0;
    // value = mantissa * 2^exponent with mantissa in [0.5, 1)
    double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return static_cast<double>(exponent) + std::log2(mantissa);
}

std::string truncate_decimal(const Rational& value, int places)
{
    BigInt scale = big_pow(10, places);
    BigInt scaled_num = value.get_num() * scale;
    BigInt truncated;
    mpz_tdiv_q(truncated.get_mpz_t(), scaled_num.get_mpz_t(), value.get_den_mpz_t());

    bool negative = sgn(truncated) < 0;
    BigInt magnitude = abs(truncated);
    BigInt whole, frac;
    mpz_tdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), magnitude.get_mpz_t(), scale.get_mpz_t());

    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (sgn(frac) != 0) {
        std::string digits = frac.get_str();
        digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0')
            digits.pop_back();
        out += "." + digits;
    }
    return out;
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_str();
}

int sign(const Rational& value)
{
    return sgn(value);
}

} // namespace eaqecc
