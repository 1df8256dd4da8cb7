#include "eaqecc/families.hpp"

#include "eaqecc/errors.hpp"
#include "eaqecc/transforms.hpp"

namespace eaqecc {

namespace {

EaCode rep_odd(std::int64_t n)
{
    return EaCode(n, 1, n, n - 1, 2, DistanceKind::Exact, Degeneracy::Nondegenerate);
}

EaCode rep_even(std::int64_t n)
{
    return EaCode(n, 1, n - 1, n - 1, 2, DistanceKind::Exact, Degeneracy::Nondegenerate);
}

FamilySpec constant_family(std::string name, EaCode code)
{
    return FamilySpec{std::move(name), Parity::Any, 0, true, [code](std::int64_t) { return code; }};
}

/// Exact distances asserted for specific concatenated families, keyed by the
/// family and constant names in concatenation order.
std::optional<std::int64_t> asserted_distance(std::string_view outer, std::string_view inner,
                                              std::int64_t n)
{
    // [[8n,1,5n;2n-1]] and [[8n,1,5n;8n-7]]
    if ((outer == "rep_odd" && inner == "C1") || (outer == "C1" && inner == "rep_odd"))
        return 5 * n;
    return std::nullopt;
}

ScanRow scan_row(std::int64_t n, EaCode code, bool asserted)
{
    BoundVerdict verdict = ea_hamming(code);
    ScanRow row{
        n,
        code,
        std::get<BigInt>(*verdict.find("sphere_count")),
        std::get<BigInt>(*verdict.find("budget")),
        verdict.status,
        hamming_efficiency(code),
        asserted,
    };
    return row;
}

std::optional<std::int64_t> violation_onset(const std::vector<ScanRow>& rows)
{
    std::optional<std::int64_t> onset;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (it->status != BoundStatus::Violated)
            break;
        onset = it->n;
    }
    return onset;
}

std::string label_of(const EaCode& code)
{
    for (const auto& name : named_code_names())
        if (named_code(name) == code)
            return name;
    return render(code);
}

EaCode promote(const EaCode& code, std::optional<std::int64_t> d)
{
    return d ? code.with_distance(d, DistanceKind::Exact) : code;
}

} // namespace

std::string_view to_string(Parity parity)
{
    switch (parity) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Any: break;
    }
    return "any";
}

bool FamilySpec::admits(std::int64_t n) const
{
    if (constant)
        return true;
    if (n < n_min)
        return false;
    if (parity == Parity::Odd)
        return n % 2 != 0;
    if (parity == Parity::Even)
        return n % 2 == 0;
    return true;
}

EaCode FamilySpec::at(std::int64_t n) const
{
    if (!admits(n))
        throw PreconditionFailure("family " + name + " has no member at n = " + std::to_string(n) +
                                  " (" + std::string(to_string(parity)) + " n >= " + std::to_string(n_min) + ")");
    return generator(n);
}

std::vector<std::int64_t> FamilySpec::admissible(std::int64_t lo, std::int64_t hi) const
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n)
        if (admits(n))
            out.push_back(n);
    return out;
}

FamilySpec family(std::string_view name)
{
    if (name == "rep_odd")
        return FamilySpec{"rep_odd", Parity::Odd, 3, false, rep_odd};
    if (name == "rep_even")
        return FamilySpec{"rep_even", Parity::Even, 4, false, rep_even};
    if (name == "rep_odd_ext")
        return FamilySpec{"rep_odd_ext", Parity::Odd, 3, false,
                          [](std::int64_t n) { return extend_code(rep_odd(n)).lengthened; }};
    if (name == "rep_even_ext")
        return FamilySpec{"rep_even_ext", Parity::Even, 4, false,
                          [](std::int64_t n) { return extend_code(rep_even(n)).lengthened; }};
    if (name == "C1" || name == "C2" || name == "C4")
        return constant_family(std::string(name), named_code(name));
    throw PreconditionFailure("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names()
{
    return {"rep_odd", "rep_even", "rep_odd_ext", "rep_even_ext", "C1", "C2", "C4"};
}

EaCode named_code(std::string_view name)
{
    if (name == "C1")
        return EaCode(8, 1, 5, 1, 2, DistanceKind::Exact, Degeneracy::Degenerate);
    if (name == "C2")
        return EaCode(7, 1, 5, 2);
    if (name == "C4")
        return EaCode(9, 1, 7, 4);
    if (name == "five13")
        return EaCode(5, 1, 3, 0);
    if (name == "four131")
        return EaCode(4, 1, 3, 1);
    if (name == "rep3132")
        return EaCode(3, 1, 3, 2);
    throw PreconditionFailure("unknown code name '" + std::string(name) + "'");
}

std::vector<std::string> named_code_names()
{
    return {"C1", "C2", "C4", "five13", "four131", "rep3132"};
}

std::int64_t default_scan_max(const FamilySpec& family)
{
    return family.parity == Parity::Odd ? 99 : 110;
}

ScanResult scan_eahb(const FamilySpec& outer, const EaCode& inner, std::int64_t n_min,
                     std::int64_t n_max)
{
    const auto ns = outer.admissible(n_min, n_max);
    if (ns.empty())
        throw PreconditionFailure("scan_eahb: no admissible n for " + outer.name + " in [" +
                                  std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    ScanResult result{outer.name, label_of(inner), {}, std::nullopt};
    for (std::int64_t n : ns) {
        auto d = asserted_distance(outer.name, result.inner, n);
        result.rows.push_back(scan_row(n, promote(concat(outer.at(n), inner).code, d), d.has_value()));
    }
    result.onset = violation_onset(result.rows);
    return result;
}

ScanResult reversed_scan_eahb(const EaCode& outer, const FamilySpec& inner, std::int64_t n_min,
                              std::int64_t n_max)
{
    const auto ns = inner.admissible(n_min, n_max);
    if (ns.empty())
        throw PreconditionFailure("reversed_scan_eahb: no admissible n for " + inner.name + " in [" +
                                  std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    ScanResult result{label_of(outer), inner.name, {}, std::nullopt};
    for (std::int64_t n : ns) {
        auto d = asserted_distance(result.outer, inner.name, n);
        result.rows.push_back(scan_row(n, promote(concat(outer, inner.at(n)).code, d), d.has_value()));
    }
    result.onset = violation_onset(result.rows);
    return result;
}

namespace {

template <typename Bound, typename Predicate>
std::vector<AuditRow> audit(const ClassicalCode& code, std::int64_t c_lo, std::int64_t c_hi,
                            Bound bound, Predicate predicate)
{
    if (c_lo > c_hi)
        throw PreconditionFailure("family audit: empty c range");
    std::vector<AuditRow> rows;
    for (std::int64_t c = c_lo; c <= c_hi; ++c) {
        EaCode induced = induce_eaqecc(code, c);
        rows.push_back(AuditRow{c, induced, bound(induced), predicate(code, c)});
    }
    return rows;
}

} // namespace

std::vector<AuditRow> griesmer_family_audit(const ClassicalCode& code, std::int64_t c_lo,
                                            std::int64_t c_hi)
{
    return audit(code, c_lo, c_hi, ea_griesmer, griesmer_saturation_predicate);
}

std::vector<AuditRow> plotkin_family_audit(const ClassicalCode& code, std::int64_t c_lo,
                                           std::int64_t c_hi)
{
    return audit(code, c_lo, c_hi, linear_ea_plotkin, plotkin_saturation_predicate);
}

std::vector<ListedFamily> listed_griesmer_families()
{
    return {
        {ClassicalCode(6, 3, 4, 4), 1, 3},
        {ClassicalCode(10, 4, 6, 4), 4, 6},
        {ClassicalCode(12, 6, 6, 4), 2, 6},
        {ClassicalCode(16, 8, 8, 4), 2, 8},
        {ClassicalCode(21, 3, 16, 4), 17, 18},
    };
}

std::vector<ListedFamily> listed_plotkin_families()
{
    return {
        {ClassicalCode(21, 3, 16, 4), 17, 18},
        {ClassicalCode(85, 4, 64, 4), 80, 81},
    };
}

ChainResult repetition_chain(std::span<const std::int64_t> lengths)
{
    std::vector<EaCode> codes;
    bool all_odd = true;
    for (std::int64_t n : lengths) {
        all_odd = all_odd && n % 2 != 0;
        codes.push_back(n % 2 != 0 ? family("rep_odd").at(n) : family("rep_even").at(n));
    }
    ChainResult chain = chain_concat(codes);
    // every prefix of an all-odd chain is itself an all-odd chain
    if (all_odd)
        for (ConcatResult& stage : chain.stages)
            stage.code = rep_odd(stage.code.n());
    return chain;
}

ConcatResult mds_propagation(std::int64_t n, const EaCode& inner)
{
    ConcatResult result = concat(family("rep_odd").at(n), inner);
    result.code = result.code.with_degeneracy(Degeneracy::Nondegenerate);
    return result;
}

std::vector<RateRow> rate_table()
{
    const std::pair<const char*, const char*> pairs[] = {
        {"rep3132", "rep3132"}, {"rep3132", "four131"}, {"rep3132", "five13"},
        {"four131", "four131"}, {"four131", "five13"},
    };
    std::vector<RateRow> rows;
    for (const auto& [outer, inner] : pairs) {
        ConcatResult r = concat(named_code(outer), named_code(inner));
        rows.push_back(RateRow{r, rates(r.code)});
    }
    return rows;
}

} // namespace eaqecc
