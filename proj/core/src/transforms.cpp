#include "eaqecc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eaqecc/errors.hpp"

namespace eaqecc {

EaCode derive_eaqecc(const EaCode& code, std::int64_t ebits)
{
    if (!code.is_standard())
        throw PreconditionFailure("derive_eaqecc: " + render(code) + " is not a standard (c = 0) code");
    if (ebits < 0 || ebits > code.n() - code.k())
        throw PreconditionFailure("derive_eaqecc: c_new = " + std::to_string(ebits) +
                                  " outside 0..n-k = " + std::to_string(code.n() - code.k()));
    if (2 * ebits > code.n() - code.k())
        throw PreconditionFailure("derive_eaqecc: c_new = " + std::to_string(ebits) + " leaves " +
                                  std::to_string(code.n() - ebits) + " transmitted qubits, fewer than k + c");
    if (ebits == 0)
        return code;
    return EaCode(code.n() - ebits, code.k(), code.d(), ebits, code.q(), code.distance_kind(),
                  code.degeneracy());
}

Extensions extend_code(const EaCode& code)
{
    Extensions out{
        EaCode(code.n() + 1, code.k(), code.d(), code.c() + 1, code.q(), code.distance_kind(),
               Degeneracy::Unknown),
        std::nullopt,
    };
    if (code.k() >= 2)
        out.reduced = EaCode(code.n(), code.k() - 1, std::nullopt, code.c() + 1, code.q());
    return out;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t q)
{
    if (q < 0)
        return std::nullopt;
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    for (std::int64_t r = std::max<std::int64_t>(0, root - 1); r <= root + 1; ++r)
        if (r * r == q)
            return r;
    return std::nullopt;
}

std::int64_t induced_dimension(const ClassicalCode& classical, std::int64_t ebits)
{
    return 2 * classical.k() - classical.n() + ebits;
}

EaCode induce_eaqecc(const ClassicalCode& classical, std::int64_t ebits)
{
    auto s = exact_sqrt(classical.q());
    if (!s || *s < 2)
        throw PreconditionFailure("induce_eaqecc: alphabet " + std::to_string(classical.q()) +
                                  " is not a perfect square s^2 with s >= 2");
    const std::int64_t n = classical.n();
    const std::int64_t k = classical.k();
    const std::int64_t lo = std::max<std::int64_t>(0, n - 2 * k + 1);
    if (ebits < lo || ebits > n - k)
        throw PreconditionFailure("induce_eaqecc: c = " + std::to_string(ebits) + " outside " +
                                  std::to_string(lo) + ".." + std::to_string(n - k) + " for " +
                                  render(classical));
    return EaCode(n, induced_dimension(classical, ebits), classical.d(), ebits, *s,
                  DistanceKind::Exact, Degeneracy::Nondegenerate);
}

} // namespace eaqecc
