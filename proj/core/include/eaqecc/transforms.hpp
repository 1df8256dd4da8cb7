#pragma once

#include <cstdint>
#include <optional>

#include "eaqecc/code.hpp"

namespace eaqecc {

/// Moves `ebits` of a standard [[n,k,d]] code's qubits to the receiver,
/// giving [[n-ebits, k, d; ebits]]. n + c is preserved.
///
/// Requires code.c() == 0 and 0 <= ebits <= n - k; the result must itself be
/// a valid code, which additionally needs 2*ebits <= n - k.
EaCode derive_eaqecc(const EaCode& code, std::int64_t ebits);

struct Extensions {
    EaCode lengthened;             // [[n+1, k, d; c+1]]
    std::optional<EaCode> reduced; // [[n, k-1; c+1]], distance unknown; needs k >= 2
};

Extensions extend_code(const EaCode& code);

/// The nondegenerate [[n, 2k-n+c, d; c]]_s code induced by a classical
/// [n,k,d]_{s^2} code. Needs q a perfect square and max(0, n-2k+1) <= c <= n-k.
EaCode induce_eaqecc(const ClassicalCode& classical, std::int64_t ebits);

/// 2k - n + c, the logical dimension of the induced code.
std::int64_t induced_dimension(const ClassicalCode& classical, std::int64_t ebits);

/// Integer square root of q when q is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t q);

} // namespace eaqecc
