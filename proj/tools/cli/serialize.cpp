#include "serialize.hpp"

#include <cmath>
#include <cstdio>

namespace eaqecc::cli {

json to_json(const BigInt& value)
{
    return to_string(value);
}

json to_json(const Rational& value)
{
    return json{{"num", to_string(BigInt(value.get_num()))}, {"den", to_string(BigInt(value.get_den()))}};
}

json to_json(const DetailValue& value)
{
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BigInt> || std::is_same_v<T, Rational>)
                return to_json(v);
            else
                return v;
        },
        value);
}

json to_json(const EaParameters& p)
{
    return json{
        {"notation", render(p)},
        {"n", p.n},
        {"k", p.k},
        {"d", p.d ? json(*p.d) : json(nullptr)},
        {"c", p.c},
        {"q", p.q},
        {"distance_kind", std::string(to_string(p.kind))},
    };
}

json to_json(const EaCode& code)
{
    json out = to_json(code.parameters());
    out["degeneracy"] = std::string(to_string(code.degeneracy()));
    return out;
}

json to_json(const ClassicalCode& code)
{
    return json{{"notation", render(code)}, {"n", code.n()}, {"k", code.k()}, {"d", code.d()}, {"q", code.q()}};
}

json to_json(const BoundVerdict& verdict)
{
    json detail = json::object();
    for (const auto& [name, value] : verdict.detail)
        detail[name] = to_json(value);
    json out{{"status", std::string(to_string(verdict.status))}, {"detail", detail}};
    out["slack"] = verdict.slack ? to_json(*verdict.slack) : json(nullptr);
    if (!verdict.reason.empty())
        out["reason"] = verdict.reason;
    return out;
}

json to_json(const BoundReport& report)
{
    json bounds = json::array();
    for (const auto& [name, verdict] : report.entries) {
        json entry = to_json(verdict);
        entry["name"] = name;
        bounds.push_back(std::move(entry));
    }
    return json{{"subject", report.subject}, {"bounds", bounds}};
}

json to_json(const ConcatResult& result)
{
    return json{
        {"code", to_json(result.code)},
        {"procedure", std::string(to_string(result.procedure))},
        {"outer", render(result.outer)},
        {"inner", render(result.inner)},
        {"distance_bound", result.distance_bound ? to_json(*result.distance_bound) : json(nullptr)},
        {"distance_floored", result.distance_floored},
    };
}

json to_json(const ParameterConcat& result)
{
    json broken = json::array();
    for (const auto& name : broken_invariants(result.result))
        broken.push_back(name);
    return json{
        {"parameters", to_json(result.result)},
        {"procedure", std::string(to_string(result.procedure))},
        {"distance_bound", result.distance_bound ? to_json(*result.distance_bound) : json(nullptr)},
        {"distance_floored", result.distance_floored},
        {"broken_invariants", broken},
    };
}

json to_json(const ScanRow& row)
{
    return json{
        {"n", row.n},
        {"code", render(row.code)},
        {"sphere_count", to_json(row.sphere_count)},
        {"budget", to_json(row.budget)},
        {"status", std::string(to_string(row.status))},
        {"phi", row.phi},
        {"distance_asserted", row.distance_asserted},
    };
}

json to_json(const ErrorPolynomial& polynomial)
{
    json coefficients = json::array();
    for (const auto& c : polynomial.coefficients())
        coefficients.push_back(to_json(c));
    return json{{"label", polynomial.label()}, {"degree", polynomial.degree()}, {"coefficients", coefficients}};
}

json error_json(const Error& error)
{
    json body{{"message", error.what()}};
    if (const auto* parse = dynamic_cast<const ParseError*>(&error)) {
        body["kind"] = "parse_error";
        body["position"] = parse->position();
    } else if (const auto* invariant = dynamic_cast<const InvariantViolation*>(&error)) {
        body["kind"] = "invariant_violation";
        body["invariant"] = invariant->invariant();
    } else if (const auto* chain = dynamic_cast<const ChainError*>(&error)) {
        body["kind"] = "precondition_failure";
        body["stage"] = chain->stage();
    } else if (dynamic_cast<const PreconditionFailure*>(&error)) {
        body["kind"] = "precondition_failure";
    } else {
        body["kind"] = "error";
    }
    return json{{"error", body}};
}

json usage_error_json(std::string_view message)
{
    return json{{"error", {{"kind", "usage_error"}, {"message", message}}}};
}

std::string csv_field(std::string_view field)
{
    if (field.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string decimal(double value, int places)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", places, value);
    return buffer;
}

std::string truncated(double value, int places)
{
    const double scale = std::pow(10.0, places);
    double cut = std::trunc(value * scale) / scale;
    if (cut == 0.0)
        cut = 0.0; // no "-0.0000"
    return decimal(cut, places);
}

} // namespace eaqecc::cli
