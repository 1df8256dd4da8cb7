#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eaqecc/bounds.hpp"
#include "eaqecc/code.hpp"
#include "eaqecc/concat.hpp"

namespace eaqecc {

enum class Parity { Odd, Even, Any };

std::string_view to_string(Parity parity);

/// A named code family indexed by n. Constant codes are families whose
/// generator ignores the index.
struct FamilySpec {
    std::string name;
    Parity parity = Parity::Any;
    std::int64_t n_min = 0;
    bool constant = false;
    std::function<EaCode(std::int64_t)> generator;

    bool admits(std::int64_t n) const;
    /// Throws PreconditionFailure for inadmissible n.
    EaCode at(std::int64_t n) const;
    std::vector<std::int64_t> admissible(std::int64_t lo, std::int64_t hi) const;
};

/// Families: "rep_odd" [[n,1,n;n-1]] (odd n >= 3), "rep_even" [[n,1,n-1;n-1]]
/// (even n >= 4), "rep_odd_ext" [[n+1,1,n;n]], "rep_even_ext" [[n+1,1,n-1;n]].
/// Constants: "C1" [[8,1,5;1]] (degenerate), "C2" [[7,1,5;2]], "C4" [[9,1,7;4]].
FamilySpec family(std::string_view name);
std::vector<std::string> family_names();

/// Constants above plus "five13" [[5,1,3;0]], "four131" [[4,1,3;1]] and
/// "rep3132" [[3,1,3;2]].
EaCode named_code(std::string_view name);
std::vector<std::string> named_code_names();

struct ScanRow {
    std::int64_t n;
    EaCode code;
    BigInt sphere_count;
    BigInt budget;
    BoundStatus status;
    double phi;
    /// Distance promoted from the concatenation lower bound to an exact value
    /// asserted for this family.
    bool distance_asserted = false;
};

struct ScanResult {
    std::string outer;
    std::string inner;
    std::vector<ScanRow> rows;
    /// Smallest scanned n from which every admissible n in range violates.
    std::optional<std::int64_t> onset;
};

/// outer(n) ▷ inner for every admissible n in [n_min, n_max], with the EA
/// Hamming bound evaluated at the distance lower bound.
ScanResult scan_eahb(const FamilySpec& outer, const EaCode& inner, std::int64_t n_min,
                     std::int64_t n_max);

/// outer ▷ inner(n).
ScanResult reversed_scan_eahb(const EaCode& outer, const FamilySpec& inner, std::int64_t n_min,
                              std::int64_t n_max);

/// Default upper end of a scan: 99 for odd families, 110 otherwise.
std::int64_t default_scan_max(const FamilySpec& family);

struct AuditRow {
    std::int64_t c;
    EaCode induced;
    BoundVerdict verdict;
    bool predicate;
};

/// Induced codes of a Griesmer-saturating [n,k,d]_4 code over c in
/// [c_lo, c_hi], with their EA Griesmer verdict and the saturation predicate.
std::vector<AuditRow> griesmer_family_audit(const ClassicalCode& code, std::int64_t c_lo,
                                            std::int64_t c_hi);

/// As above for a Plotkin-saturating code and the linear EA Plotkin bound.
std::vector<AuditRow> plotkin_family_audit(const ClassicalCode& code, std::int64_t c_lo,
                                           std::int64_t c_hi);

struct ListedFamily {
    ClassicalCode code;
    std::int64_t c_lo;
    std::int64_t c_hi;
};

/// Quaternary Griesmer codes with the c ranges whose induced codes saturate.
std::vector<ListedFamily> listed_griesmer_families();

/// Quaternary Plotkin codes with the c ranges whose induced codes saturate.
std::vector<ListedFamily> listed_plotkin_families();

/// Left-fold concatenation of repetition codes of the given lengths (odd
/// lengths from rep_odd, even from rep_even). Every stage of an all-odd chain is a
/// nondegenerate [[N,1,N;N-1]] member and carries its exact distance.
ChainResult repetition_chain(std::span<const std::int64_t> lengths);

/// rep_odd(n) ▷ inner, marked nondegenerate: [[5n,1,>=3n;n-1]] for [[5,1,3]]
/// and [[4n,1,>=3n;2n-1]] for [[4,1,3;1]].
ConcatResult mds_propagation(std::int64_t n, const EaCode& inner);

struct RateRow {
    ConcatResult construction;
    RateSummary rates; // relative distance taken at the distance lower bound
};

/// Two-level concatenations of [[3,1,3;2]], [[4,1,3;1]] and [[5,1,3]]:
/// [[9,1,9;8]], [[12,1,9;5]], [[15,1,9;2]], [[16,1,9;5]], [[20,1,9;1]].
std::vector<RateRow> rate_table();

} // namespace eaqecc
