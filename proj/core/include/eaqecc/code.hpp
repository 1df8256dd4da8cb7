#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>
#include <string_view>

#include "eaqecc/numeric.hpp"

namespace eaqecc {

enum class DistanceKind { Exact, LowerBound };

enum class Degeneracy { Nondegenerate, Degenerate, Unknown };

std::string_view to_string(DistanceKind kind);
std::string_view to_string(Degeneracy degeneracy);

/// Parameters of an entanglement-assisted code [[n,k,d;c]]_q.
///
/// n counts the qudits the sender transmits, k the logical qudits and c the
/// preshared ebits; a = n - k - c ancillas remain. The distance is optional
/// because several constructions are stated without one, and a distance
/// obtained from concatenation is only a lower bound (DistanceKind).
/// Degeneracy is never inferred from the parameters.
/// An [[n,k,d;c]]_q tuple that has not been checked against the code
/// invariants. Used for parameter-level arithmetic on tuples quoted in the
/// literature that do not form valid codes.
struct EaParameters {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> d;
    std::int64_t c = 0;
    std::int64_t q = 2;
    DistanceKind kind = DistanceKind::Exact;

    friend bool operator==(const EaParameters&, const EaParameters&) = default;
};

/// Names of the EaCode invariants the tuple breaks, empty for a valid code.
std::vector<std::string> broken_invariants(const EaParameters& params);

class EaCode {
public:
    /// Throws InvariantViolation if the tuple is not a valid code.
    EaCode(std::int64_t n, std::int64_t k, std::optional<std::int64_t> d, std::int64_t c,
           std::int64_t q = 2, DistanceKind kind = DistanceKind::Exact,
           Degeneracy degeneracy = Degeneracy::Unknown);
    explicit EaCode(const EaParameters& params, Degeneracy degeneracy = Degeneracy::Unknown);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t k() const noexcept { return k_; }
    std::optional<std::int64_t> d() const noexcept { return d_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t q() const noexcept { return q_; }
    DistanceKind distance_kind() const noexcept { return kind_; }
    Degeneracy degeneracy() const noexcept { return degeneracy_; }

    EaParameters parameters() const { return EaParameters{n_, k_, d_, c_, q_, kind_}; }

    bool has_distance() const noexcept { return d_.has_value(); }
    /// Throws PreconditionFailure when the distance is not stated.
    std::int64_t distance() const;

    std::int64_t ancillas() const noexcept { return n_ - k_ - c_; }
    bool is_maximal_entanglement() const noexcept { return c_ == n_ - k_; }
    bool is_standard() const noexcept { return c_ == 0; }

    EaCode with_degeneracy(Degeneracy degeneracy) const;
    EaCode with_distance(std::optional<std::int64_t> d, DistanceKind kind) const;

    friend bool operator==(const EaCode&, const EaCode&) = default;

private:
    std::int64_t n_;
    std::int64_t k_;
    std::optional<std::int64_t> d_;
    std::int64_t c_;
    std::int64_t q_;
    DistanceKind kind_;
    Degeneracy degeneracy_;
};

/// Parameters of a classical linear code [n,k,d]_q.
class ClassicalCode {
public:
    ClassicalCode(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q = 2);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t k() const noexcept { return k_; }
    std::int64_t d() const noexcept { return d_; }
    std::int64_t q() const noexcept { return q_; }

    friend bool operator==(const ClassicalCode&, const ClassicalCode&) = default;

private:
    std::int64_t n_;
    std::int64_t k_;
    std::int64_t d_;
    std::int64_t q_;
};

struct RateSummary {
    Rational rate;                   // k/n
    Rational entanglement_rate;      // c/n
    Rational net_rate;               // (k-c)/n
    std::optional<Rational> relative_distance;  // d/n
};

RateSummary rates(const EaCode& code);

/// Notation such as "[[8,1,5;1]]", "[[12,1,≥9;5]]", "[[5,1;2]]" or "[[6,3,4;3]]_4"
/// (the alphabet suffix is omitted for q = 2). Accepted back by parse_code.
std::string render(const EaCode& code);

std::string render(const EaParameters& params);

/// Notation such as "[6,3,4]_4" (suffix omitted for q = 2).
std::string render(const ClassicalCode& code);

} // namespace eaqecc
