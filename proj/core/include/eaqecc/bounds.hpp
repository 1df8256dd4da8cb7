#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eaqecc/code.hpp"
#include "eaqecc/numeric.hpp"

namespace eaqecc {

enum class BoundStatus { NotApplicable, Satisfied, Saturated, Violated };

/// Lowercase wire name: "not_applicable", "satisfied", "saturated", "violated".
std::string_view to_string(BoundStatus status);

using DetailValue = std::variant<bool, std::int64_t, BigInt, Rational, std::string>;

/// Outcome of one bound check. `slack` is bound side minus constrained side;
/// Saturated iff slack == 0 and Violated iff slack < 0. Absent when the bound
/// does not apply.
struct BoundVerdict {
    BoundStatus status = BoundStatus::NotApplicable;
    std::string reason;
    std::optional<Rational> slack;
    std::vector<std::pair<std::string, DetailValue>> detail;

    static BoundVerdict not_applicable(std::string reason);
    static BoundVerdict from_slack(Rational slack);

    BoundVerdict& note(std::string name, DetailValue value);
    const DetailValue* find(std::string_view name) const;

    bool holds() const noexcept
    {
        return status == BoundStatus::Satisfied || status == BoundStatus::Saturated;
    }
};

struct BoundReport {
    std::string subject;
    std::vector<std::pair<std::string, BoundVerdict>> entries;

    /// Throws std::out_of_range for unknown bound names.
    const BoundVerdict& at(std::string_view name) const;
};

// --- EA bounds -------------------------------------------------------------
// Unless stated otherwise each check needs a stated distance and throws
// PreconditionFailure without one. A LowerBound distance is used as is and
// the verdict is tagged with "distance_basis"; only a violation is conclusive.

/// EA Singleton bound. Nondegenerate codes, and degenerate codes with
/// d <= n/2 + 1, use k <= c + n - 2d + 2. Degenerate codes with d > n/2 + 1
/// use the high-distance form. With unknown degeneracy and d > n/2 + 1 both
/// are evaluated and the weaker (larger slack) verdict is reported.
BoundVerdict ea_singleton(const EaCode& code);

/// k <= (n-d+1)(c+2d-2-n)/(3d-3-n); applicable only when d >= n/2 + 1.
BoundVerdict ea_singleton_high_distance(const EaCode& code);

/// Sum_{i<=t} 3^i C(n,i) for the binary EA Hamming bound.
BigInt hamming_sphere_count(std::int64_t n, std::int64_t t);

/// EA Hamming bound sum_{i<=t} 3^i C(n,i) <= 2^(n-k+c), t = floor((d-1)/2).
/// Binary only; q > 2 is NotApplicable. A violation certifies degeneracy.
BoundVerdict ea_hamming(const EaCode& code);

/// log2(sphere count)/(n-k+c). Exceeds 1 exactly when ea_hamming is violated.
double hamming_efficiency(const EaCode& code);

/// n >= sum_{i<k} ceil(d/q^i).
BoundVerdict classical_griesmer(const ClassicalCode& code);

/// (n+c+k)/2 >= sum_{i<k} ceil(d/q^(2i)), for codes derived from q^2-ary codes.
BoundVerdict ea_griesmer(const EaCode& code);

/// (q-1) n q^k / (q (q^k - 1)) >= d; applicable when d > (1 - 1/q) n.
BoundVerdict classical_plotkin(const ClassicalCode& code);

/// (q^2-1) q^(2k) / (2 q^2 (q^(2k)-1)) (n+c+k) >= d.
BoundVerdict linear_ea_plotkin(const EaCode& code);

/// n - k >= d (1 + 1/q) - 2; applicable when d >= q.
BoundVerdict classical_griesmer_based(const ClassicalCode& code);

/// EA Griesmer-Rains: n - k + c >= 2d (1 + 1/q^2) - 4; applicable when d >= q^2.
BoundVerdict ea_griesmer_rains(const EaCode& code);

/// floor((q^2 r + 2q^2 - 2) / (4 (q^2 + 1))) with r = n - k + c. Conforming
/// codes have floor((d-1)/2) no larger than this. Needs d >= q^2.
std::int64_t max_correctable_errors_cap(const EaCode& code);
std::int64_t max_correctable_errors_cap(std::int64_t q, std::int64_t redundancy);

/// For k = 1 codes that are nondegenerate or have d <= n/2 + 1: true iff
/// d = (n + 1 + c)/2, i.e. EA Singleton, EA Griesmer and linear EA Plotkin
/// are saturated together. Throws PreconditionFailure otherwise.
bool saturation_trio(const EaCode& code);

/// For a Griesmer-saturating [n,k,d]_4 code and the induced code at `ebits`:
/// true iff the induced code is maximal-entanglement or d <= 4^kappa.
/// Equals "ea_griesmer(induce_eaqecc(code, ebits)) is Saturated".
bool griesmer_saturation_predicate(const ClassicalCode& code, std::int64_t ebits);

/// For a Plotkin-saturating [n,k,d]_4 code: true iff the induced code is
/// maximal-entanglement or (d/3)(1 - 4^(-a/2))/4^(kappa-1) = a/2, a = 2(n-k-c).
/// Equals "linear_ea_plotkin(induce_eaqecc(code, ebits)) is Saturated".
bool plotkin_saturation_predicate(const ClassicalCode& code, std::int64_t ebits);

/// Every EA bound, in registry order.
BoundReport check(const EaCode& code);

/// Every classical bound, in registry order.
BoundReport check(const ClassicalCode& code);

struct EaBoundEntry {
    std::string_view name;
    BoundVerdict (*evaluate)(const EaCode&);
};

struct ClassicalBoundEntry {
    std::string_view name;
    BoundVerdict (*evaluate)(const ClassicalCode&);
};

std::span<const EaBoundEntry> ea_bound_registry();
std::span<const ClassicalBoundEntry> classical_bound_registry();

} // namespace eaqecc
