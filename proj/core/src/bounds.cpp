#include "eaqecc/bounds.hpp"

#include <array>
#include <stdexcept>

#include "eaqecc/errors.hpp"
#include "eaqecc/transforms.hpp"

namespace eaqecc {

namespace {

Rational rat(std::int64_t v)
{
    return make_rational(v);
}

Rational rat(const BigInt& v)
{
    return Rational(v);
}

/// sum_{i<terms} ceil(d / base^i). Once base^i >= d every remaining term is 1.
BigInt griesmer_sum(std::int64_t d, std::int64_t base, std::int64_t terms)
{
    BigInt sum = 0;
    BigInt power = 1;
    const BigInt dist = static_cast<long>(d);
    for (std::int64_t i = 0; i < terms; ++i) {
        if (power >= dist) {
            sum += terms - i;
            break;
        }
        sum += ceil_div(dist, power);
        power *= static_cast<long>(base);
    }
    return sum;
}

/// Tags verdicts computed at a concatenation lower bound. The constrained
/// side of every bound grows with d, so only a violation carries over to the
/// true distance.
void tag_distance_basis(BoundVerdict& verdict, const EaCode& code, bool monotone = true)
{
    if (code.distance_kind() != DistanceKind::LowerBound || verdict.status == BoundStatus::NotApplicable)
        return;
    verdict.note("distance_basis", std::string("at stated lower-bound distance"));
    verdict.note("conclusive", monotone && verdict.status == BoundStatus::Violated);
}

void note_derivation_hypothesis(BoundVerdict& verdict)
{
    verdict.note("applicability", std::string("assumes the code is derived from a classical q^2-ary code"));
}

Rational standard_singleton_slack(const EaCode& code, std::int64_t d)
{
    return rat(code.c() + code.n() - 2 * d + 2 - code.k());
}

Rational high_distance_singleton_slack(const EaCode& code, std::int64_t d)
{
    const std::int64_t n = code.n();
    Rational bound = make_rational((n - d + 1) * (code.c() + 2 * d - 2 - n), 3 * d - 3 - n);
    return bound - rat(code.k());
}

bool in_high_distance_regime(const EaCode& code, std::int64_t d)
{
    return 2 * d >= code.n() + 2;
}

} // namespace

std::string_view to_string(BoundStatus status)
{
    switch (status) {
    case BoundStatus::NotApplicable: return "not_applicable";
    case BoundStatus::Satisfied: return "satisfied";
    case BoundStatus::Saturated: return "saturated";
    case BoundStatus::Violated: break;
    }
    return "violated";
}

BoundVerdict BoundVerdict::not_applicable(std::string reason)
{
    BoundVerdict v;
    v.status = BoundStatus::NotApplicable;
    v.reason = std::move(reason);
    return v;
}

BoundVerdict BoundVerdict::from_slack(Rational slack)
{
    BoundVerdict v;
    const int s = sgn(slack);
    v.status = s > 0 ? BoundStatus::Satisfied : s == 0 ? BoundStatus::Saturated : BoundStatus::Violated;
    v.slack = std::move(slack);
    return v;
}

BoundVerdict& BoundVerdict::note(std::string name, DetailValue value)
{
    for (auto& [key, existing] : detail) {
        if (key == name) {
            existing = std::move(value);
            return *this;
        }
    }
    detail.emplace_back(std::move(name), std::move(value));
    return *this;
}

const DetailValue* BoundVerdict::find(std::string_view name) const
{
    for (const auto& [key, value] : detail)
        if (key == name)
            return &value;
    return nullptr;
}

const BoundVerdict& BoundReport::at(std::string_view name) const
{
    for (const auto& [key, verdict] : entries)
        if (key == name)
            return verdict;
    throw std::out_of_range("no bound named " + std::string(name));
}

BoundVerdict ea_singleton(const EaCode& code)
{
    const std::int64_t d = code.distance();
    const bool high = in_high_distance_regime(code, d) && 2 * d != code.n() + 2;

    BoundVerdict verdict;
    if (!high || code.degeneracy() == Degeneracy::Nondegenerate) {
        verdict = BoundVerdict::from_slack(standard_singleton_slack(code, d));
        verdict.note("regime", std::string("standard"));
    } else if (code.degeneracy() == Degeneracy::Degenerate) {
        verdict = BoundVerdict::from_slack(high_distance_singleton_slack(code, d));
        verdict.note("regime", std::string("high_distance"));
    } else {
        Rational standard = standard_singleton_slack(code, d);
        Rational high_distance = high_distance_singleton_slack(code, d);
        verdict = BoundVerdict::from_slack(standard >= high_distance ? standard : high_distance);
        verdict.note("regime", std::string("weaker_of_both"));
        verdict.note("standard_slack", standard);
        verdict.note("standard_status", std::string(to_string(BoundVerdict::from_slack(standard).status)));
        verdict.note("high_distance_slack", high_distance);
        verdict.note("high_distance_status",
                     std::string(to_string(BoundVerdict::from_slack(high_distance).status)));
    }
    tag_distance_basis(verdict, code, !high);
    return verdict;
}

BoundVerdict ea_singleton_high_distance(const EaCode& code)
{
    const std::int64_t d = code.distance();
    if (!in_high_distance_regime(code, d))
        return BoundVerdict::not_applicable("requires d >= n/2 + 1");
    BoundVerdict verdict = BoundVerdict::from_slack(high_distance_singleton_slack(code, d));
    tag_distance_basis(verdict, code, false);
    return verdict;
}

BigInt hamming_sphere_count(std::int64_t n, std::int64_t t)
{
    BigInt sum = 0;
    BigInt term = 1; // 3^i C(n,i)
    for (std::int64_t i = 0; i <= t && i <= n; ++i) {
        sum += term;
        term *= 3 * (n - i);
        term /= i + 1;
    }
    return sum;
}

BoundVerdict ea_hamming(const EaCode& code)
{
    const std::int64_t d = code.distance();
    if (code.q() != 2)
        return BoundVerdict::not_applicable("EA Hamming bound is stated for binary codes only");
    const std::int64_t t = (d - 1) / 2;
    BigInt spheres = hamming_sphere_count(code.n(), t);
    BigInt budget = big_pow(2, code.n() - code.k() + code.c());

    BoundVerdict verdict = BoundVerdict::from_slack(rat(BigInt(budget - spheres)));
    verdict.note("t", t);
    verdict.note("sphere_count", spheres);
    verdict.note("budget", budget);
    verdict.note("degeneracy_certificate", verdict.status == BoundStatus::Violated);
    tag_distance_basis(verdict, code);
    return verdict;
}

double hamming_efficiency(const EaCode& code)
{
    const std::int64_t d = code.distance();
    if (code.q() != 2)
        throw PreconditionFailure("hamming_efficiency: binary codes only");
    const std::int64_t redundancy = code.n() - code.k() + code.c();
    if (redundancy == 0)
        throw PreconditionFailure("hamming_efficiency: n - k + c = 0");
    return log2_big(hamming_sphere_count(code.n(), (d - 1) / 2)) / static_cast<double>(redundancy);
}

BoundVerdict classical_griesmer(const ClassicalCode& code)
{
    BigInt sum = griesmer_sum(code.d(), code.q(), code.k());
    BoundVerdict verdict = BoundVerdict::from_slack(rat(BigInt(code.n() - sum)));
    verdict.note("griesmer_sum", sum);
    return verdict;
}

BoundVerdict ea_griesmer(const EaCode& code)
{
    const std::int64_t d = code.distance();
    BigInt sum = griesmer_sum(d, code.q() * code.q(), code.k());
    Rational lhs = make_rational(code.n() + code.c() + code.k(), 2);
    BoundVerdict verdict = BoundVerdict::from_slack(lhs - rat(sum));
    verdict.note("half_n_plus_c_plus_k", lhs);
    verdict.note("griesmer_sum", sum);
    note_derivation_hypothesis(verdict);
    tag_distance_basis(verdict, code);
    return verdict;
}

BoundVerdict classical_plotkin(const ClassicalCode& code)
{
    const std::int64_t q = code.q();
    if (q * code.d() <= (q - 1) * code.n())
        return BoundVerdict::not_applicable("requires d > (1 - 1/q) n");
    BigInt qk = big_pow(q, code.k());
    Rational lhs(BigInt((q - 1) * code.n()) * qk, BigInt(q) * BigInt(qk - 1));
    lhs.canonicalize();
    BoundVerdict verdict = BoundVerdict::from_slack(lhs - rat(code.d()));
    verdict.note("plotkin_limit", lhs);
    return verdict;
}

BoundVerdict linear_ea_plotkin(const EaCode& code)
{
    const std::int64_t d = code.distance();
    const std::int64_t q2 = code.q() * code.q();
    BigInt q2k = big_pow(q2, code.k());
    Rational factor(BigInt(q2 - 1) * q2k, BigInt(2 * q2) * BigInt(q2k - 1));
    factor.canonicalize();
    Rational lhs = factor * rat(code.n() + code.c() + code.k());
    BoundVerdict verdict = BoundVerdict::from_slack(lhs - rat(d));
    verdict.note("plotkin_limit", lhs);
    note_derivation_hypothesis(verdict);
    tag_distance_basis(verdict, code);
    return verdict;
}

BoundVerdict classical_griesmer_based(const ClassicalCode& code)
{
    const std::int64_t q = code.q();
    if (code.d() < q)
        return BoundVerdict::not_applicable("requires d >= q");
    Rational rhs = make_rational(code.d() * (q + 1), q) - rat(2);
    BoundVerdict verdict = BoundVerdict::from_slack(rat(code.n() - code.k()) - rhs);
    verdict.note("required_redundancy", rhs);
    return verdict;
}

BoundVerdict ea_griesmer_rains(const EaCode& code)
{
    const std::int64_t d = code.distance();
    const std::int64_t q2 = code.q() * code.q();
    if (d < q2)
        return BoundVerdict::not_applicable("requires d >= q^2");
    Rational rhs = make_rational(2 * d * (q2 + 1), q2) - rat(4);
    BoundVerdict verdict = BoundVerdict::from_slack(rat(code.n() - code.k() + code.c()) - rhs);
    verdict.note("required_redundancy", rhs);
    verdict.note("correctable_cap", max_correctable_errors_cap(code.q(), code.n() - code.k() + code.c()));
    note_derivation_hypothesis(verdict);
    tag_distance_basis(verdict, code);
    return verdict;
}

std::int64_t max_correctable_errors_cap(std::int64_t q, std::int64_t redundancy)
{
    if (q < 2 || redundancy < 0)
        throw PreconditionFailure("max_correctable_errors_cap: needs q >= 2 and n - k + c >= 0");
    const std::int64_t q2 = q * q;
    return (q2 * redundancy + 2 * q2 - 2) / (4 * (q2 + 1));
}

std::int64_t max_correctable_errors_cap(const EaCode& code)
{
    const std::int64_t d = code.distance();
    if (d < code.q() * code.q())
        throw PreconditionFailure("max_correctable_errors_cap: requires d >= q^2, got " + render(code));
    return max_correctable_errors_cap(code.q(), code.n() - code.k() + code.c());
}

bool saturation_trio(const EaCode& code)
{
    if (code.k() != 1)
        throw PreconditionFailure("saturation_trio: requires k = 1, got " + render(code));
    const std::int64_t d = code.distance();
    if (code.degeneracy() != Degeneracy::Nondegenerate && 2 * d > code.n() + 2)
        throw PreconditionFailure("saturation_trio: " + render(code) +
                                  " is not known to be nondegenerate and has d > n/2 + 1");
    return 2 * d == code.n() + 1 + code.c();
}

bool griesmer_saturation_predicate(const ClassicalCode& code, std::int64_t ebits)
{
    if (code.q() != 4)
        throw PreconditionFailure("griesmer_saturation_predicate: requires a quaternary code");
    if (classical_griesmer(code).status != BoundStatus::Saturated)
        throw PreconditionFailure("griesmer_saturation_predicate: " + render(code) +
                                  " does not saturate the Griesmer bound");
    const EaCode induced = induce_eaqecc(code, ebits);
    if (induced.is_maximal_entanglement())
        return true;
    return BigInt(static_cast<long>(code.d())) <= big_pow(4, induced.k());
}

bool plotkin_saturation_predicate(const ClassicalCode& code, std::int64_t ebits)
{
    if (code.q() != 4)
        throw PreconditionFailure("plotkin_saturation_predicate: requires a quaternary code");
    if (classical_plotkin(code).status != BoundStatus::Saturated)
        throw PreconditionFailure("plotkin_saturation_predicate: " + render(code) +
                                  " does not saturate the Plotkin bound");
    const EaCode induced = induce_eaqecc(code, ebits);
    if (induced.is_maximal_entanglement())
        return true;
    const std::int64_t half_a = code.n() - code.k() - ebits;
    Rational tail = rat(1) - Rational(BigInt(1), big_pow(4, half_a));
    Rational lhs = make_rational(code.d(), 3) * tail / Rational(big_pow(4, induced.k() - 1));
    return lhs == rat(half_a);
}

namespace {

constexpr std::array<EaBoundEntry, 6> ea_registry{{
    {"ea_singleton", &ea_singleton},
    {"ea_singleton_high_distance", &ea_singleton_high_distance},
    {"ea_hamming", &ea_hamming},
    {"ea_griesmer", &ea_griesmer},
    {"linear_ea_plotkin", &linear_ea_plotkin},
    {"ea_griesmer_rains", &ea_griesmer_rains},
}};

constexpr std::array<ClassicalBoundEntry, 3> classical_registry{{
    {"griesmer", &classical_griesmer},
    {"plotkin", &classical_plotkin},
    {"griesmer_based", &classical_griesmer_based},
}};

} // namespace

std::span<const EaBoundEntry> ea_bound_registry()
{
    return ea_registry;
}

std::span<const ClassicalBoundEntry> classical_bound_registry()
{
    return classical_registry;
}

BoundReport check(const EaCode& code)
{
    BoundReport report{render(code), {}};
    for (const auto& entry : ea_registry) {
        try {
            report.entries.emplace_back(std::string(entry.name), entry.evaluate(code));
        } catch (const PreconditionFailure& e) {
            report.entries.emplace_back(std::string(entry.name), BoundVerdict::not_applicable(e.what()));
        }
    }
    return report;
}

BoundReport check(const ClassicalCode& code)
{
    BoundReport report{render(code), {}};
    for (const auto& entry : classical_registry)
        report.entries.emplace_back(std::string(entry.name), entry.evaluate(code));
    return report;
}

} // namespace eaqecc
