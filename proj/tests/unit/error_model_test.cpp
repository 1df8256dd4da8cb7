#include <gtest/gtest.h>

#include <cmath>

#include "eaqecc/error_model.hpp"
#include "eaqecc/errors.hpp"

using namespace eaqecc;

namespace {

std::vector<Rational> ints(std::initializer_list<long> values)
{
    std::vector<Rational> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

ErrorPolynomial poly(std::initializer_list<long> values)
{
    return ErrorPolynomial(ints(values), "test");
}

} // namespace

TEST(Polynomial, PerfectCodes)
{
    EXPECT_EQ(perfect_t_polynomial(5, 1), poly({0, 0, 10, -20, 15, -4}));
    EXPECT_EQ(perfect_t_polynomial(4, 1), poly({0, 0, 6, -8, 3}));
    EXPECT_EQ(perfect_t_polynomial(5, 5).degree(), 0u);
    EXPECT_EQ(perfect_t_polynomial(5, 5).coefficient(0), 0);
    EXPECT_EQ(perfect_t_polynomial(5, 1).evaluate(make_rational(1, 2)), make_rational(13, 16));
}

TEST(Polynomial, RepPrinted)
{
    ErrorPolynomial f = rep_3132_polynomial();
    EXPECT_EQ(f.coefficient(2), make_rational(25, 9));
    EXPECT_EQ(f.coefficient(3), make_rational(-16, 9));
    EXPECT_EQ(f.evaluate(Rational(0)), 0);
    EXPECT_EQ(f.evaluate(Rational(1)), 1);
}

TEST(Polynomial, RangeInvariant)
{
    EXPECT_THROW(poly({0, 2}), InvariantViolation);
    EXPECT_THROW(poly({0, -1}), InvariantViolation);
    EXPECT_NO_THROW(poly({0, 1}));
}

TEST(CorrectableSets, Validation)
{
    EXPECT_THROW(CorrectableSet(3, {"XII"}), InvariantViolation);
    EXPECT_THROW(CorrectableSet(3, {"III", "III"}), InvariantViolation);
    EXPECT_THROW(CorrectableSet(3, {"III", "XI"}), InvariantViolation);
    EXPECT_THROW(CorrectableSet(3, {"III", "XIA"}), InvariantViolation);
    EXPECT_EQ(CorrectableSet::rep3132_listed().patterns().size(), 16u);
    EXPECT_EQ(CorrectableSet::up_to_weight(3, 1).patterns().size(), 10u);
}

TEST(CorrectableSets, OracleValues)
{
    EXPECT_EQ(polynomial_from_set(CorrectableSet(3, {"III"})), poly({0, 3, -3, 1}));
    EXPECT_EQ(polynomial_from_set(CorrectableSet::up_to_weight(3, 1)), poly({0, 0, 3, -2}));
    ErrorPolynomial listed = polynomial_from_set(CorrectableSet::rep3132_listed());
    EXPECT_EQ(listed.coefficient(2), make_rational(7, 3));
    EXPECT_EQ(listed.coefficient(3), make_rational(-4, 3));

    Weight2Discrepancy gap = rep3132_weight2_discrepancy();
    EXPECT_EQ(gap.printed, make_rational(2, 9));
    EXPECT_EQ(gap.enumerated, make_rational(2, 3));
    EXPECT_FALSE(gap.agrees());
}

TEST(CorrectableSets, PerfectAgreement)
{
    for (std::int64_t n = 1; n <= 5; ++n)
        for (std::int64_t t = 0; t <= std::min<std::int64_t>(2, n); ++t)
            EXPECT_EQ(perfect_t_polynomial(n, t), polynomial_from_set(CorrectableSet::up_to_weight(n, t)))
                << n << "," << t;
}

TEST(Compose, IdentityAndDegree)
{
    ErrorPolynomial five = perfect_t_polynomial(5, 1);
    EXPECT_EQ(compose(ErrorPolynomial::identity(), five), five);
    EXPECT_EQ(compose(five, ErrorPolynomial::identity()), five);
    ErrorPolynomial fr = compose(named_polynomial("five13"), named_polynomial("rep3132"));
    EXPECT_EQ(fr.degree(), 15u);
    EXPECT_EQ(fr.label(), "five13 ▷ rep3132");
    EXPECT_EQ(compose(rep_3132_polynomial(), five).degree(), 15u);
}

TEST(Compose, Associative)
{
    ErrorPolynomial f = perfect_t_polynomial(5, 1), g = rep_3132_polynomial(), h = perfect_t_polynomial(4, 1);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
    EXPECT_EQ(compose(h, compose(f, g)), compose(compose(h, f), g));
}

TEST(Pseudothreshold, Components)
{
    // sympy nroots of f(p) - p
    EXPECT_NEAR(*pseudothreshold(perfect_t_polynomial(5, 1)), 0.13112314790418054, 1e-8);
    EXPECT_NEAR(*pseudothreshold(perfect_t_polynomial(4, 1)), 0.23240812075600178, 1e-8);
    EXPECT_FALSE(pseudothreshold(rep_3132_polynomial()));
}

TEST(Pseudothreshold, Concatenations)
{
    ErrorPolynomial five = perfect_t_polynomial(5, 1), four = perfect_t_polynomial(4, 1);
    ErrorPolynomial rep = rep_3132_polynomial();
    EXPECT_NEAR(*pseudothreshold(compose(five, rep)), 0.32184701792450416, 1e-8);
    EXPECT_NEAR(*pseudothreshold(compose(rep, five)), 0.22846873445485637, 1e-8);
    EXPECT_NEAR(*pseudothreshold(compose(five, four)), 0.18770470906740870, 1e-8);
    EXPECT_NEAR(*pseudothreshold(compose(four, five)), 0.16221516500321876, 1e-8);
}

TEST(Pseudothreshold, SelfCompositionInvariant)
{
    for (const auto& name : polynomial_names()) {
        ErrorPolynomial f = named_polynomial(name);
        auto once = pseudothreshold(f);
        auto twice = pseudothreshold(compose(f, f));
        ASSERT_EQ(once.has_value(), twice.has_value()) << name;
        if (once)
            EXPECT_NEAR(*once, *twice, 1e-8) << name;
    }
}

TEST(Pseudothreshold, TolRefinement)
{
    ErrorPolynomial f = compose(perfect_t_polynomial(5, 1), perfect_t_polynomial(4, 1));
    const double coarse = *pseudothreshold(f, 1e-6);
    for (double tol : {1e-7, 1e-9, 1e-12})
        EXPECT_EQ(std::floor(*pseudothreshold(f, tol) * 1e4), std::floor(coarse * 1e4));
}

TEST(Pseudothreshold, Preconditions)
{
    EXPECT_THROW(pseudothreshold(poly({1})), PreconditionFailure);
    EXPECT_THROW(pseudothreshold(perfect_t_polynomial(5, 1), 0.0), PreconditionFailure);
}

TEST(Curve, Endpoints)
{
    auto points = curve(perfect_t_polynomial(5, 1), 0.0, 0.5, 11);
    ASSERT_EQ(points.size(), 11u);
    EXPECT_EQ(points.front().value, 0.0);
    EXPECT_DOUBLE_EQ(points.back().p, 0.5);
    EXPECT_DOUBLE_EQ(points.back().value, 0.8125);
    EXPECT_DOUBLE_EQ(curve(rep_3132_polynomial(), 0.0, 1.0, 2).back().value, 1.0);
    EXPECT_THROW(curve(rep_3132_polynomial(), 0.5, 0.5, 3), PreconditionFailure);
    EXPECT_THROW(curve(rep_3132_polynomial(), 0.0, 0.5, 1), PreconditionFailure);
}

TEST(Curve, MonotoneOnLowerHalf)
{
    for (const auto& name : polynomial_names()) {
        auto points = curve(named_polynomial(name), 0.0, 0.5, 501);
        for (std::size_t i = 1; i < points.size(); ++i)
            EXPECT_LE(points[i - 1].value, points[i].value) << name << " at " << points[i].p;
    }
}

TEST(Registry, Names)
{
    EXPECT_EQ(named_polynomial("five13"), perfect_t_polynomial(5, 1));
    EXPECT_EQ(named_polynomial("four131"), perfect_t_polynomial(4, 1));
    EXPECT_EQ(named_polynomial("rep3132"), rep_3132_polynomial());
    EXPECT_THROW(named_polynomial("seven"), PreconditionFailure);
}
