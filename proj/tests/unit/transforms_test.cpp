#include <gtest/gtest.h>

#include "eaqecc/errors.hpp"
#include "eaqecc/transforms.hpp"

using namespace eaqecc;

TEST(Derive, FiveQubitCode)
{
    EaCode five(5, 1, 3, 0);
    EXPECT_EQ(derive_eaqecc(five, 2), EaCode(3, 1, 3, 2));
    EXPECT_EQ(derive_eaqecc(five, 1), EaCode(4, 1, 3, 1));
    EXPECT_EQ(derive_eaqecc(five, 0), five);
    EXPECT_THROW(derive_eaqecc(five, 3), PreconditionFailure);
    EXPECT_THROW(derive_eaqecc(EaCode(4, 1, 3, 1), 1), PreconditionFailure);
}

TEST(Derive, PreservesLengthPlusEbits)
{
    for (std::int64_t n = 2; n <= 20; ++n)
        for (std::int64_t k = 1; k < n; ++k)
            for (std::int64_t e = 0; 2 * e <= n - k; ++e) {
                EaCode derived = derive_eaqecc(EaCode(n, k, 1, 0), e);
                EXPECT_EQ(derived.n() + derived.c(), n);
                EXPECT_EQ(derived.k(), k);
                EXPECT_EQ(derived.d(), 1);
            }
}

TEST(Extend, RepetitionFamilies)
{
    EXPECT_EQ(extend_code(EaCode(5, 1, 5, 4)).lengthened, EaCode(6, 1, 5, 5));
    EXPECT_EQ(extend_code(EaCode(10, 1, 9, 9)).lengthened, EaCode(11, 1, 9, 10));
    EXPECT_FALSE(extend_code(EaCode(5, 1, 5, 4)).reduced);
    auto reduced = extend_code(EaCode(5, 2, 3, 0)).reduced;
    ASSERT_TRUE(reduced);
    EXPECT_EQ(*reduced, EaCode(5, 1, std::nullopt, 1));
}

TEST(Induce, QuaternaryCodes)
{
    EXPECT_EQ(induce_eaqecc(ClassicalCode(6, 3, 4, 4), 3),
              EaCode(6, 3, 4, 3, 2, DistanceKind::Exact, Degeneracy::Nondegenerate));
    EXPECT_EQ(induce_eaqecc(ClassicalCode(21, 3, 16, 4), 17).k(), 2);
    EXPECT_EQ(induce_eaqecc(ClassicalCode(21, 3, 16, 4), 17).c(), 17);
    EXPECT_EQ(induce_eaqecc(ClassicalCode(21, 3, 16, 4), 16).k(), 1);
    EXPECT_THROW(induce_eaqecc(ClassicalCode(21, 3, 16, 4), 15), PreconditionFailure);
    EXPECT_THROW(induce_eaqecc(ClassicalCode(7, 4, 3, 2), 0), PreconditionFailure);
}

TEST(Induce, KappaMinusEbitsConstant)
{
    ClassicalCode code(16, 8, 8, 4);
    for (std::int64_t c = 1; c <= 8; ++c) {
        EaCode induced = induce_eaqecc(code, c);
        EXPECT_EQ(induced.k() - induced.c(), 2 * code.k() - code.n());
    }
}
