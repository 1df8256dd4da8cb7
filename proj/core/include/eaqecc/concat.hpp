#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eaqecc/code.hpp"
#include "eaqecc/errors.hpp"
#include "eaqecc/numeric.hpp"

namespace eaqecc {

/// Divisible: k_inner | n_outer, outer blocks of k_inner qubits are re-encoded
/// directly. NonDivisible: k_inner copies of the outer code are interleaved.
enum class Procedure { Divisible, NonDivisible };

std::string_view to_string(Procedure procedure);

/// outer ▷ inner.
///
///   Divisible:    [[n_o n_i / k_i, k_o, >= d_o d_i / k_i; c_o + c_i n_o / k_i]]
///   NonDivisible: [[n_o n_i, k_o k_i, >= d_o d_i; c_o k_i + c_i n_o]]
struct ConcatResult {
    EaCode code;
    Procedure procedure;
    EaCode outer;
    EaCode inner;
    /// Exact d_o d_i / k_i (or d_o d_i); absent unless both distances are known.
    std::optional<Rational> distance_bound;
    /// True when the stored distance is the floor of a non-integer bound.
    bool distance_floored = false;
};

/// Dispatches on k_inner | n_outer unless `force` is given. Forcing
/// NonDivisible is always allowed. The result's distance is a LowerBound and
/// its degeneracy Unknown. Throws PreconditionFailure on alphabet mismatch or
/// a forced Divisible procedure when k_inner does not divide n_outer.
ConcatResult concat(const EaCode& outer, const EaCode& inner,
                    std::optional<Procedure> force = std::nullopt);

struct BothOrders {
    ConcatResult forward;   // a ▷ b
    ConcatResult backward;  // b ▷ a
    std::int64_t ebit_difference; // c(a ▷ b) - c(b ▷ a)
};

BothOrders both_orders(const EaCode& a, const EaCode& b);

/// The concatenation arithmetic alone, for tuples that need not be valid
/// codes. Requires positive n and k on both sides and matching alphabets.
struct ParameterConcat {
    EaParameters result;
    Procedure procedure;
    std::optional<Rational> distance_bound;
    bool distance_floored = false;
};

ParameterConcat concat_parameters(const EaParameters& outer, const EaParameters& inner,
                                  std::optional<Procedure> force = std::nullopt);

struct ParameterBothOrders {
    ParameterConcat forward;
    ParameterConcat backward;
    std::int64_t ebit_difference;
};

ParameterBothOrders both_orders_parameters(const EaParameters& a, const EaParameters& b);

/// Failure at one stage of a chained concatenation.
class ChainError : public PreconditionFailure {
public:
    ChainError(std::size_t stage, const std::string& message)
        : PreconditionFailure("stage " + std::to_string(stage) + ": " + message), stage_(stage) {}
    std::size_t stage() const noexcept { return stage_; }

private:
    std::size_t stage_;
};

struct ChainResult {
    /// stages[i] is (((c1 ▷ c2) ▷ ...) ▷ c_{i+2}).
    std::vector<ConcatResult> stages;

    const ConcatResult& result() const { return stages.back(); }
};

/// Left fold (((c1 ▷ c2) ▷ c3) ...). Needs at least two codes.
ChainResult chain_concat(std::span<const EaCode> codes);

} // namespace eaqecc
