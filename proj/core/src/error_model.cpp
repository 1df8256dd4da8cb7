#include "eaqecc/error_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "eaqecc/errors.hpp"

namespace eaqecc {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c)
{
    while (c.size() > 1 && sgn(c.back()) == 0)
        c.pop_back();
    if (c.empty())
        c.emplace_back(0);
}

Coeffs add(const Coeffs& a, const Coeffs& b)
{
    Coeffs out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    trim(out);
    return out;
}

Coeffs scale(Coeffs a, const Rational& s)
{
    for (auto& x : a)
        x *= s;
    trim(a);
    return a;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b)
{
    Coeffs out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

/// p^i (1-p)^m
Coeffs monomial_times_complement(std::int64_t i, std::int64_t m)
{
    Coeffs out(static_cast<std::size_t>(i + m + 1), Rational(0));
    for (std::int64_t j = 0; j <= m; ++j) {
        Rational c(binomial(m, j));
        if (j % 2 == 1)
            c = -c;
        out[static_cast<std::size_t>(i + j)] = c;
    }
    return out;
}

std::int64_t pauli_weight(const std::string& pattern)
{
    return static_cast<std::int64_t>(std::count_if(pattern.begin(), pattern.end(),
                                                   [](char ch) { return ch != 'I'; }));
}

} // namespace

ErrorPolynomial::ErrorPolynomial(std::vector<Rational> coefficients, std::string label)
    : coefficients_(std::move(coefficients)), label_(std::move(label))
{
    for (auto& c : coefficients_)
        c.canonicalize();
    trim(coefficients_);

    denominator_ = 1;
    for (const auto& c : coefficients_)
        mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), c.get_den_mpz_t());
    numerators_.reserve(coefficients_.size());
    for (const auto& c : coefficients_)
        numerators_.push_back(c.get_num() * (denominator_ / c.get_den()));

    for (long i = 0; i <= 1000; ++i) {
        Rational value = evaluate(Rational(i, 1000));
        if (sgn(value) < 0 || value > 1)
            throw InvariantViolation("0 <= p_L(p) <= 1",
                                     "invariant violation: " + label_ + " leaves [0,1] at p = " +
                                         std::to_string(i) + "/1000");
    }
}

ErrorPolynomial ErrorPolynomial::identity()
{
    return ErrorPolynomial({Rational(0), Rational(1)}, "p");
}

Rational ErrorPolynomial::coefficient(std::size_t i) const
{
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational ErrorPolynomial::evaluate(const Rational& p) const
{
    // p = a/b: value = sum num_i a^i b^(D-i) / (den b^D)
    const BigInt& a = p.get_num();
    const BigInt& b = p.get_den();
    BigInt acc = numerators_.back();
    BigInt b_power = 1;
    for (std::size_t i = numerators_.size() - 1; i-- > 0;) {
        b_power *= b;
        acc = acc * a + numerators_[i] * b_power;
    }
    Rational value(acc, denominator_ * b_power);
    value.canonicalize();
    return value;
}

double ErrorPolynomial::evaluate(double p) const
{
    return evaluate(Rational(p)).get_d();
}

CorrectableSet::CorrectableSet(std::int64_t n, const std::vector<std::string>& patterns) : n_(n)
{
    if (n < 1)
        throw InvariantViolation("n >= 1", "invariant violation: correctable set needs n >= 1");
    for (const auto& pattern : patterns) {
        if (static_cast<std::int64_t>(pattern.size()) != n)
            throw InvariantViolation("pattern length n", "invariant violation: pattern '" + pattern +
                                                             "' does not have length " + std::to_string(n));
        if (pattern.find_first_not_of("IXYZ") != std::string::npos)
            throw InvariantViolation("patterns over {I,X,Y,Z}",
                                     "invariant violation: pattern '" + pattern + "' has a letter outside IXYZ");
        if (!patterns_.insert(pattern).second)
            throw InvariantViolation("patterns distinct",
                                     "invariant violation: pattern '" + pattern + "' listed twice");
    }
    if (!patterns_.contains(std::string(static_cast<std::size_t>(n), 'I')))
        throw InvariantViolation("contains identity",
                                 "invariant violation: correctable set must contain the identity");
}

CorrectableSet CorrectableSet::up_to_weight(std::int64_t n, std::int64_t t)
{
    static constexpr std::array<char, 4> letters{'I', 'X', 'Y', 'Z'};
    std::vector<std::string> patterns;
    std::string current(static_cast<std::size_t>(n), 'I');
    // odometer over 4^n patterns
    while (true) {
        if (pauli_weight(current) <= t)
            patterns.push_back(current);
        std::size_t pos = 0;
        for (; pos < current.size(); ++pos) {
            auto it = std::find(letters.begin(), letters.end(), current[pos]);
            if (it + 1 != letters.end()) {
                current[pos] = *(it + 1);
                break;
            }
            current[pos] = 'I';
        }
        if (pos == current.size())
            break;
    }
    return CorrectableSet(n, patterns);
}

CorrectableSet CorrectableSet::rep3132_listed()
{
    return CorrectableSet(3, {"III", "XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "YII", "IYI", "IIY",
                              "XZI", "XIZ", "ZXI", "IXZ", "ZIX", "IZX"});
}

ErrorPolynomial perfect_t_polynomial(std::int64_t n, std::int64_t t)
{
    if (n < 1 || t < 0 || t > n)
        throw PreconditionFailure("perfect_t_polynomial: needs 0 <= t <= n");
    Coeffs success{Rational(0)};
    for (std::int64_t i = 0; i <= t; ++i)
        success = add(success, scale(monomial_times_complement(i, n - i), Rational(binomial(n, i))));
    return ErrorPolynomial(add(Coeffs{Rational(1)}, scale(success, Rational(-1))),
                           "perfect(" + std::to_string(n) + "," + std::to_string(t) + ")");
}

ErrorPolynomial rep_3132_polynomial()
{
    Coeffs f{Rational(1)};
    f = add(f, scale(monomial_times_complement(0, 3), Rational(-1)));
    f = add(f, scale(monomial_times_complement(1, 2), Rational(-3)));
    f = add(f, scale(monomial_times_complement(2, 1), Rational(-2, 9)));
    return ErrorPolynomial(f, "rep3132");
}

ErrorPolynomial polynomial_from_set(const CorrectableSet& set)
{
    Coeffs success{Rational(0)};
    for (const auto& pattern : set.patterns()) {
        const std::int64_t w = pauli_weight(pattern);
        Rational weight_factor(BigInt(1), big_pow(3, w));
        success = add(success, scale(monomial_times_complement(w, set.n() - w), weight_factor));
    }
    return ErrorPolynomial(add(Coeffs{Rational(1)}, scale(success, Rational(-1))),
                           "set(" + std::to_string(set.patterns().size()) + " patterns)");
}

ErrorPolynomial compose(const ErrorPolynomial& outer, const ErrorPolynomial& inner)
{
    const auto& c = outer.coefficients();
    Coeffs acc{c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;)
        acc = add(multiply(acc, inner.coefficients()), Coeffs{c[i]});
    return ErrorPolynomial(acc, outer.label() + " ▷ " + inner.label());
}

std::optional<double> pseudothreshold(const ErrorPolynomial& f, double tol)
{
    if (sgn(f.coefficient(0)) != 0)
        throw PreconditionFailure("pseudothreshold: " + f.label() + " does not vanish at p = 0");
    if (!(tol > 0))
        throw PreconditionFailure("pseudothreshold: tolerance must be positive");

    auto excess = [&f](const Rational& p) { return sgn(Rational(f.evaluate(p) - p)); };

    const long cells = std::lround(pseudothreshold_ceiling / pseudothreshold_grid_step);
    const long per_unit = std::lround(1.0 / pseudothreshold_grid_step);
    for (long i = 1; i <= cells; ++i) {
        Rational hi(i, per_unit);
        hi.canonicalize();
        const int s = excess(hi);
        if (s < 0)
            continue;
        if (s == 0)
            return hi.get_d();
        Rational lo(i - 1, per_unit);
        lo.canonicalize();
        const Rational width_limit(tol);
        while (Rational(hi - lo) > width_limit) {
            Rational mid = (lo + hi) / 2;
            const int m = excess(mid);
            if (m == 0)
                return mid.get_d();
            (m < 0 ? lo : hi) = mid;
        }
        return Rational((lo + hi) / 2).get_d();
    }
    return std::nullopt;
}

std::vector<CurvePoint> curve(const ErrorPolynomial& f, double p_min, double p_max, int steps)
{
    if (!(p_min >= 0 && p_min < p_max && p_max <= 1) || steps < 2)
        throw PreconditionFailure("curve: needs 0 <= p_min < p_max <= 1 and steps >= 2");
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(steps));
    const Rational lo(p_min), hi(p_max);
    for (int j = 0; j < steps; ++j) {
        Rational p = lo + (hi - lo) * Rational(j, steps - 1);
        p.canonicalize();
        points.push_back({p.get_d(), f.evaluate(p).get_d()});
    }
    return points;
}

ErrorPolynomial named_polynomial(std::string_view name)
{
    if (name == "five13") {
        ErrorPolynomial f = perfect_t_polynomial(5, 1);
        return ErrorPolynomial(f.coefficients(), "five13");
    }
    if (name == "four131") {
        ErrorPolynomial f = perfect_t_polynomial(4, 1);
        return ErrorPolynomial(f.coefficients(), "four131");
    }
    if (name == "rep3132")
        return rep_3132_polynomial();
    throw PreconditionFailure("unknown polynomial name '" + std::string(name) +
                              "' (expected five13, four131 or rep3132)");
}

std::vector<std::string> polynomial_names()
{
    return {"five13", "four131", "rep3132"};
}

Weight2Discrepancy rep3132_weight2_discrepancy()
{
    const CorrectableSet listed = CorrectableSet::rep3132_listed();
    std::int64_t pairs = 0;
    for (const auto& pattern : listed.patterns())
        if (pauli_weight(pattern) == 2)
            ++pairs;
    return Weight2Discrepancy{make_rational(2, 9), make_rational(pairs, 9)};
}

} // namespace eaqecc
