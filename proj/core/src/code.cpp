#include "eaqecc/code.hpp"

#include "eaqecc/errors.hpp"

namespace eaqecc {

namespace {

void require(bool condition, const char* invariant, const std::string& what)
{
    if (!condition)
        throw InvariantViolation(invariant, "invariant violation: " + std::string(invariant) + " (" + what + ")");
}

std::string tuple_text(const EaParameters& p)
{
    return "n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) + ", c=" + std::to_string(p.c);
}

} // namespace

std::string_view to_string(DistanceKind kind)
{
    return kind == DistanceKind::Exact ? "exact" : "lower_bound";
}

std::string_view to_string(Degeneracy degeneracy)
{
    switch (degeneracy) {
    case Degeneracy::Nondegenerate: return "nondegenerate";
    case Degeneracy::Degenerate: return "degenerate";
    case Degeneracy::Unknown: break;
    }
    return "unknown";
}

std::vector<std::string> broken_invariants(const EaParameters& p)
{
    std::vector<std::string> broken;
    if (p.n < 1)
        broken.emplace_back("n >= 1");
    if (p.k < 1)
        broken.emplace_back("k >= 1");
    if (p.q < 2)
        broken.emplace_back("q >= 2");
    if (p.c < 0)
        broken.emplace_back("c >= 0");
    if (p.c > p.n - p.k)
        broken.emplace_back("c <= n - k");
    if (p.d && *p.d < 1)
        broken.emplace_back("d >= 1");
    if (p.d && p.kind == DistanceKind::Exact && *p.d > p.n)
        broken.emplace_back("d <= n");
    return broken;
}

EaCode::EaCode(std::int64_t n, std::int64_t k, std::optional<std::int64_t> d, std::int64_t c,
               std::int64_t q, DistanceKind kind, Degeneracy degeneracy)
    : EaCode(EaParameters{n, k, d, c, q, kind}, degeneracy)
{
}

EaCode::EaCode(const EaParameters& p, Degeneracy degeneracy)
    : n_(p.n), k_(p.k), d_(p.d), c_(p.c), q_(p.q), kind_(p.kind), degeneracy_(degeneracy)
{
    const std::string tuple = tuple_text(p);
    require(p.n >= 1, "n >= 1", tuple);
    require(p.k >= 1, "k >= 1", tuple);
    require(p.q >= 2, "q >= 2", "q=" + std::to_string(p.q));
    require(p.c >= 0, "c >= 0", tuple);
    require(p.c <= p.n - p.k, "c <= n - k", tuple);
    if (p.d) {
        require(*p.d >= 1, "d >= 1", "d=" + std::to_string(*p.d));
        if (p.kind == DistanceKind::Exact)
            require(*p.d <= p.n, "d <= n", "d=" + std::to_string(*p.d) + ", n=" + std::to_string(p.n));
    }
}

std::int64_t EaCode::distance() const
{
    if (!d_)
        throw PreconditionFailure("code " + render(*this) + " has no stated distance");
    return *d_;
}

EaCode EaCode::with_degeneracy(Degeneracy degeneracy) const
{
    EaCode copy = *this;
    copy.degeneracy_ = degeneracy;
    return copy;
}

EaCode EaCode::with_distance(std::optional<std::int64_t> d, DistanceKind kind) const
{
    return EaCode(n_, k_, d, c_, q_, kind, degeneracy_);
}

ClassicalCode::ClassicalCode(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q)
    : n_(n), k_(k), d_(d), q_(q)
{
    const std::string tuple = "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                              ", d=" + std::to_string(d);
    require(n >= 1, "n >= 1", tuple);
    require(k >= 1 && k <= n, "1 <= k <= n", tuple);
    require(d >= 1 && d <= n, "1 <= d <= n", tuple);
    require(q >= 2, "q >= 2", "q=" + std::to_string(q));
}

RateSummary rates(const EaCode& code)
{
    RateSummary summary;
    summary.rate = make_rational(code.k(), code.n());
    summary.entanglement_rate = make_rational(code.c(), code.n());
    summary.net_rate = make_rational(code.k() - code.c(), code.n());
    if (code.d())
        summary.relative_distance = make_rational(*code.d(), code.n());
    return summary;
}

std::string render(const EaParameters& p)
{
    std::string out = "[[" + std::to_string(p.n) + "," + std::to_string(p.k);
    if (p.d) {
        out += ",";
        if (p.kind == DistanceKind::LowerBound)
            out += "≥";
        out += std::to_string(*p.d);
    }
    out += ";" + std::to_string(p.c) + "]]";
    if (p.q != 2)
        out += "_" + std::to_string(p.q);
    return out;
}

std::string render(const EaCode& code)
{
    return render(code.parameters());
}

std::string render(const ClassicalCode& code)
{
    std::string out = "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," +
                      std::to_string(code.d()) + "]";
    if (code.q() != 2)
        out += "_" + std::to_string(code.q());
    return out;
}

} // namespace eaqecc
