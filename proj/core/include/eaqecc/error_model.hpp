#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eaqecc/numeric.hpp"

namespace eaqecc {

/// Logical error probability p_L(p) as an exact polynomial in the physical
/// error probability p, constant term first.
///
/// Construction checks 0 <= p_L(p) <= 1 at the 1001 points p = i/1000 and
/// throws InvariantViolation otherwise. Trailing zero coefficients are dropped.
class ErrorPolynomial {
public:
    ErrorPolynomial(std::vector<Rational> coefficients, std::string label);

    /// p_L(p) = p, the unencoded qubit.
    static ErrorPolynomial identity();

    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    /// Coefficient of p^i, zero past the degree.
    Rational coefficient(std::size_t i) const;
    std::size_t degree() const noexcept { return coefficients_.size() - 1; }
    const std::string& label() const noexcept { return label_; }

    Rational evaluate(const Rational& p) const;
    /// Exact evaluation at the binary value of `p`, rounded once at the end.
    double evaluate(double p) const;

    /// Coefficients only; labels are ignored.
    friend bool operator==(const ErrorPolynomial& a, const ErrorPolynomial& b)
    {
        return a.coefficients_ == b.coefficients_;
    }

private:
    std::vector<Rational> coefficients_;
    std::string label_;
    // numerators over a common denominator, for integer-only Horner evaluation
    std::vector<BigInt> numerators_;
    BigInt denominator_;
};

/// Pauli patterns over {I,X,Y,Z} on the n sender qubits that a code corrects.
class CorrectableSet {
public:
    /// Throws InvariantViolation on wrong lengths, foreign letters, duplicate
    /// patterns, or a missing all-identity pattern.
    CorrectableSet(std::int64_t n, const std::vector<std::string>& patterns);

    /// Every pattern of weight <= t.
    static CorrectableSet up_to_weight(std::int64_t n, std::int64_t t);

    /// The 16 patterns listed for the [[3,1,3;2]] EA repetition code: the
    /// identity, all single-qubit errors and the six X/Z pairs.
    static CorrectableSet rep3132_listed();

    std::int64_t n() const noexcept { return n_; }
    const std::set<std::string>& patterns() const noexcept { return patterns_; }

private:
    std::int64_t n_;
    std::set<std::string> patterns_;
};

/// 1 - sum_{i<=t} C(n,i) p^i (1-p)^(n-i).
ErrorPolynomial perfect_t_polynomial(std::int64_t n, std::int64_t t);

/// 1 - (1-p)^3 - 3(1-p)^2 p - (2/9)(1-p)p^2, as printed for [[3,1,3;2]]_R.
ErrorPolynomial rep_3132_polynomial();

/// 1 - sum over patterns of (p/3)^w (1-p)^(n-w) under depolarizing noise on
/// the sender's qubits.
ErrorPolynomial polynomial_from_set(const CorrectableSet& set);

/// p_L^{outer ▷ inner}(p) = p_L^outer(p_L^inner(p)).
ErrorPolynomial compose(const ErrorPolynomial& outer, const ErrorPolynomial& inner);

inline constexpr double pseudothreshold_grid_step = 1e-3;
inline constexpr double pseudothreshold_ceiling = 0.5;

/// Smallest p* in (0, 0.5] with f(p*) = p* and f(p) < p below it. Sign scan
/// of f(p) - p on the grid i/1000, then bisection of the first bracketing cell
/// down to width `tol`. Signs are decided in exact arithmetic. Returns
/// nullopt when f(p) < p on the whole grid. Throws PreconditionFailure when
/// f(0) != 0 or tol <= 0.
std::optional<double> pseudothreshold(const ErrorPolynomial& f, double tol = 1e-9);

struct CurvePoint {
    double p;
    double value;
};

/// `steps` uniformly spaced evaluations over [p_min, p_max].
std::vector<CurvePoint> curve(const ErrorPolynomial& f, double p_min, double p_max, int steps);

/// Component registry: "five13" ([[5,1,3]]), "four131" ([[4,1,3;1]]),
/// "rep3132" ([[3,1,3;2]]_R). Throws PreconditionFailure for other names.
ErrorPolynomial named_polynomial(std::string_view name);
std::vector<std::string> polynomial_names();

/// The weight-2 correction coefficient of [[3,1,3;2]]_R two ways: as printed
/// (2/9) and as enumerated from the listed correctable set (6 * (1/3)^2).
struct Weight2Discrepancy {
    Rational printed;
    Rational enumerated;
    bool agrees() const { return printed == enumerated; }
};

Weight2Discrepancy rep3132_weight2_discrepancy();

} // namespace eaqecc
