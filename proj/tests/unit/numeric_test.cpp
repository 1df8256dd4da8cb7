#include <gtest/gtest.h>

#include "eaqecc/numeric.hpp"

using namespace eaqecc;

TEST(Numeric, BinomialAndPowers)
{
    EXPECT_EQ(binomial(24, 7), BigInt(346104));
    EXPECT_EQ(binomial(5, 0), BigInt(1));
    EXPECT_EQ(big_pow(2, 100), BigInt("1267650600228229401496703205376"));
}

TEST(Numeric, CeilDiv)
{
    EXPECT_EQ(ceil_div(16, 4), BigInt(4));
    EXPECT_EQ(ceil_div(5, 4), BigInt(2));
    EXPECT_EQ(ceil_div(1, 16), BigInt(1));
}

TEST(Numeric, TruncateNotRound)
{
    EXPECT_EQ(truncate_decimal(make_rational(5, 12)), "0.4166");
    EXPECT_EQ(truncate_decimal(make_rational(-7, 9)), "-0.7777");
    EXPECT_EQ(truncate_decimal(make_rational(-1, 15)), "-0.0666");
    EXPECT_EQ(truncate_decimal(make_rational(3, 4)), "0.75");
    EXPECT_EQ(truncate_decimal(make_rational(1, 1)), "1");
    EXPECT_EQ(truncate_decimal(make_rational(0, 20)), "0");
    EXPECT_EQ(truncate_decimal(make_rational(-1, 100000)), "0");
}

TEST(Numeric, Log2Big)
{
    EXPECT_NEAR(log2_big(BigInt(277)), 8.113742, 1e-6);
    EXPECT_NEAR(log2_big(big_pow(3, 400)), 400 * 1.584962500721156, 1e-9);
}
