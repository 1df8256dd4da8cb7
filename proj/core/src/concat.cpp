#include "eaqecc/concat.hpp"

#include <algorithm>
#include <string>

#include "eaqecc/errors.hpp"

namespace eaqecc {

std::string_view to_string(Procedure procedure)
{
    return procedure == Procedure::Divisible ? "divisible" : "non_divisible";
}

ParameterConcat concat_parameters(const EaParameters& outer, const EaParameters& inner,
                                  std::optional<Procedure> force)
{
    if (outer.n < 1 || outer.k < 1 || inner.n < 1 || inner.k < 1)
        throw PreconditionFailure("concat: needs n >= 1 and k >= 1 on both codes");
    if (outer.q != inner.q)
        throw PreconditionFailure("concat: alphabet mismatch between " + render(outer) + " and " +
                                  render(inner));
    const bool divides = outer.n % inner.k == 0;
    if (force == Procedure::Divisible && !divides)
        throw PreconditionFailure("concat: Divisible procedure needs k_inner | n_outer, but " +
                                  std::to_string(inner.k) + " does not divide " + std::to_string(outer.n));
    const Procedure procedure = force.value_or(divides ? Procedure::Divisible : Procedure::NonDivisible);

    ParameterConcat out{EaParameters{}, procedure, std::nullopt, false};
    EaParameters& r = out.result;
    r.q = outer.q;
    r.kind = DistanceKind::LowerBound;
    if (procedure == Procedure::Divisible) {
        const std::int64_t blocks = outer.n / inner.k;
        r.n = blocks * inner.n;
        r.k = outer.k;
        r.c = outer.c + inner.c * blocks;
    } else {
        r.n = outer.n * inner.n;
        r.k = outer.k * inner.k;
        r.c = outer.c * inner.k + inner.c * outer.n;
    }

    if (outer.d && inner.d) {
        const std::int64_t product = *outer.d * *inner.d;
        if (procedure == Procedure::Divisible) {
            out.distance_bound = make_rational(product, inner.k);
            out.distance_floored = product % inner.k != 0;
            // every code has d >= 1, so a bound below one carries no information
            r.d = std::max<std::int64_t>(1, product / inner.k);
        } else {
            out.distance_bound = make_rational(product);
            r.d = product;
        }
    }
    return out;
}

ParameterBothOrders both_orders_parameters(const EaParameters& a, const EaParameters& b)
{
    ParameterConcat forward = concat_parameters(a, b);
    ParameterConcat backward = concat_parameters(b, a);
    const std::int64_t difference = forward.result.c - backward.result.c;
    return ParameterBothOrders{std::move(forward), std::move(backward), difference};
}

ConcatResult concat(const EaCode& outer, const EaCode& inner, std::optional<Procedure> force)
{
    ParameterConcat p = concat_parameters(outer.parameters(), inner.parameters(), force);
    return ConcatResult{EaCode(p.result), p.procedure, outer, inner, p.distance_bound, p.distance_floored};
}

BothOrders both_orders(const EaCode& a, const EaCode& b)
{
    ConcatResult forward = concat(a, b);
    ConcatResult backward = concat(b, a);
    const std::int64_t difference = forward.code.c() - backward.code.c();
    return BothOrders{std::move(forward), std::move(backward), difference};
}

ChainResult chain_concat(std::span<const EaCode> codes)
{
    if (codes.size() < 2)
        throw PreconditionFailure("chain_concat: needs at least two codes");
    ChainResult chain;
    EaCode accumulated = codes[0];
    for (std::size_t i = 1; i < codes.size(); ++i) {
        try {
            chain.stages.push_back(concat(accumulated, codes[i]));
        } catch (const Error& e) {
            throw ChainError(i, e.what());
        }
        accumulated = chain.stages.back().code;
    }
    return chain;
}

} // namespace eaqecc
