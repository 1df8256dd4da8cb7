#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "eaqecc/bounds.hpp"
#include "eaqecc/concat.hpp"
#include "eaqecc/error_model.hpp"
#include "eaqecc/errors.hpp"
#include "eaqecc/families.hpp"
#include "eaqecc/notation.hpp"
#include "serialize.hpp"

namespace eaqecc::cli {

namespace {

void emit_json(std::ostream& out, std::string_view command, json payload)
{
    json envelope{{"command", command}, {"payload", std::move(payload)}};
    out << envelope.dump(2) << "\n";
}

std::string status_text(BoundStatus status)
{
    return std::string(to_string(status));
}

std::string slack_text(const BoundVerdict& verdict)
{
    return verdict.slack ? to_string(*verdict.slack) : "-";
}

// Net-rate cells of the reference rate table that disagree with (k - c)/n.
const std::map<std::string, std::string>& printed_net_rate_errata()
{
    static const std::map<std::string, std::string> errata{{"[[15,1,9;2]]", "-0.6666"}};
    return errata;
}

Rational parse_coefficient(const json& value)
{
    if (value.is_number_integer())
        return Rational(BigInt(std::to_string(value.get<std::int64_t>())));
    if (value.is_string()) {
        Rational r;
        if (r.set_str(value.get<std::string>(), 10) != 0)
            throw ParseError("syntax error: bad coefficient '" + value.get<std::string>() + "'", 0);
        r.canonicalize();
        return r;
    }
    if (value.is_object() && value.contains("num") && value.contains("den")) {
        auto part = [](const json& v) {
            return v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::int64_t>());
        };
        Rational r(BigInt(part(value["num"])), BigInt(part(value["den"])));
        if (r.get_den() == 0)
            throw ParseError("syntax error: zero denominator in coefficient", 0);
        r.canonicalize();
        return r;
    }
    throw ParseError("syntax error: coefficients are integers, \"a/b\" strings or {num, den} objects", 0);
}

ErrorPolynomial read_polynomial_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionFailure("cannot read polynomial file '" + path + "'");
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
    }
    std::string label = path;
    json coefficients = document;
    if (document.is_object()) {
        coefficients = document.value("coefficients", json());
        label = document.value("label", path);
    }
    if (!coefficients.is_array() || coefficients.empty())
        throw ParseError("syntax error: expected a non-empty JSON array of coefficients", 0);
    std::vector<Rational> values;
    try {
        for (const auto& c : coefficients)
            values.push_back(parse_coefficient(c));
    } catch (const json::exception& e) {
        throw ParseError(std::string("syntax error: ") + e.what(), 0);
    }
    return ErrorPolynomial(std::move(values), label);
}

ErrorPolynomial select_polynomial(const std::string& outer, const std::string& inner, const std::string& poly_file)
{
    ErrorPolynomial f = poly_file.empty() ? named_polynomial(outer) : read_polynomial_file(poly_file);
    if (!inner.empty())
        f = compose(f, named_polynomial(inner));
    return f;
}

EaCode inner_code(const std::string& text)
{
    const auto names = named_code_names();
    if (std::find(names.begin(), names.end(), text) != names.end())
        return named_code(text);
    return parse_ea_code(text);
}

} // namespace

void run_check(const CheckOptions& options, std::ostream& out)
{
    AnyCode parsed = parse_code(options.code);
    if (auto* classical = std::get_if<ClassicalCode>(&parsed)) {
        BoundReport report = check(*classical);
        if (options.format == Format::Json) {
            emit_json(out, "check", json{{"code", to_json(*classical)}, {"report", to_json(report)}});
            return;
        }
        if (options.format == Format::Csv) {
            out << "bound,status,slack\n";
            for (const auto& [name, verdict] : report.entries)
                out << name << "," << status_text(verdict.status) << "," << csv_field(slack_text(verdict)) << "\n";
            return;
        }
        out << fmt::format("{}\n{:<28}{:<16}{}\n", report.subject, "bound", "status", "slack");
        for (const auto& [name, verdict] : report.entries)
            out << fmt::format("{:<28}{:<16}{}\n", name, status_text(verdict.status), slack_text(verdict));
        return;
    }

    EaCode code = std::get<EaCode>(parsed);
    if (options.degenerate)
        code = code.with_degeneracy(*options.degenerate ? Degeneracy::Degenerate : Degeneracy::Nondegenerate);
    BoundReport report = check(code);

    std::optional<double> phi;
    if (code.q() == 2 && code.d() && code.n() - code.k() + code.c() > 0)
        phi = hamming_efficiency(code);
    std::optional<bool> trio;
    if (code.k() == 1 && code.d()) {
        try {
            trio = saturation_trio(code);
        } catch (const PreconditionFailure&) {
        }
    }

    if (options.format == Format::Json) {
        json payload{{"code", to_json(code)}, {"report", to_json(report)}};
        payload["phi"] = phi ? json(*phi) : json(nullptr);
        payload["saturation_trio"] = trio ? json(*trio) : json(nullptr);
        emit_json(out, "check", std::move(payload));
        return;
    }
    if (options.format == Format::Csv) {
        out << "bound,status,slack\n";
        for (const auto& [name, verdict] : report.entries)
            out << name << "," << status_text(verdict.status) << "," << csv_field(slack_text(verdict)) << "\n";
        return;
    }
    out << fmt::format("{}  degeneracy: {}\n", report.subject, to_string(code.degeneracy()));
    out << fmt::format("{:<28}{:<16}{}\n", "bound", "status", "slack");
    for (const auto& [name, verdict] : report.entries) {
        out << fmt::format("{:<28}{:<16}{}", name, status_text(verdict.status), slack_text(verdict));
        if (verdict.status == BoundStatus::NotApplicable && !verdict.reason.empty())
            out << "  (" << verdict.reason << ")";
        out << "\n";
    }
    if (phi)
        out << fmt::format("{:<28}{}\n", "hamming_efficiency", truncated(*phi));
    if (trio)
        out << fmt::format("{:<28}{}\n", "saturation_trio", *trio ? "true" : "false");
}

void run_concat(const ConcatOptions& options, std::ostream& out)
{
    std::optional<Procedure> force;
    if (options.force == 1)
        force = Procedure::Divisible;
    else if (options.force == 2)
        force = Procedure::NonDivisible;

    if (options.parameters_only) {
        EaParameters a = parse_ea_parameters(options.outer);
        EaParameters b = parse_ea_parameters(options.inner);
        ParameterConcat forward = concat_parameters(a, b, force);
        std::optional<ParameterConcat> backward;
        if (options.both_orders)
            backward = concat_parameters(b, a, force);

        if (options.format == Format::Json) {
            json inputs = json::array();
            for (const auto* p : {&a, &b}) {
                json entry = to_json(*p);
                entry["broken_invariants"] = broken_invariants(*p);
                inputs.push_back(entry);
            }
            json payload{{"mode", "parameters"}, {"inputs", inputs}, {"forward", to_json(forward)}};
            if (backward) {
                payload["backward"] = to_json(*backward);
                payload["ebit_difference"] = forward.result.c - backward->result.c;
            }
            emit_json(out, "concat", std::move(payload));
            return;
        }
        if (options.format == Format::Csv) {
            out << "direction,outer,inner,result,procedure,n,k,d,c\n";
            auto row = [&](const char* dir, const EaParameters& o, const EaParameters& i, const ParameterConcat& r) {
                out << dir << "," << csv_field(render(o)) << "," << csv_field(render(i)) << ","
                    << csv_field(render(r.result)) << "," << to_string(r.procedure) << "," << r.result.n << ","
                    << r.result.k << "," << (r.result.d ? std::to_string(*r.result.d) : "") << "," << r.result.c
                    << "\n";
            };
            row("forward", a, b, forward);
            if (backward)
                row("backward", b, a, *backward);
            return;
        }
        for (const auto* p : {&a, &b}) {
            auto broken = broken_invariants(*p);
            for (const auto& name : broken)
                out << fmt::format("note: {} breaks {}; parameter arithmetic only\n", render(*p), name);
        }
        out << fmt::format("{} ▷ {} = {}  {}\n", render(a), render(b), render(forward.result),
                           to_string(forward.procedure));
        if (backward) {
            out << fmt::format("{} ▷ {} = {}  {}\n", render(b), render(a), render(backward->result),
                               to_string(backward->procedure));
            out << fmt::format("ebits c = {}, c' = {}, c - c' = {}\n", forward.result.c, backward->result.c,
                               forward.result.c - backward->result.c);
        }
        return;
    }

    EaCode a = parse_ea_code(options.outer);
    EaCode b = parse_ea_code(options.inner);
    ConcatResult forward = concat(a, b, force);
    std::optional<ConcatResult> backward;
    if (options.both_orders)
        backward = concat(b, a, force);

    if (options.format == Format::Json) {
        json payload{{"mode", "codes"}, {"forward", to_json(forward)}};
        if (backward) {
            payload["backward"] = to_json(*backward);
            payload["ebit_difference"] = forward.code.c() - backward->code.c();
        }
        emit_json(out, "concat", std::move(payload));
        return;
    }
    if (options.format == Format::Csv) {
        out << "direction,outer,inner,result,procedure,n,k,d,c\n";
        auto row = [&](const char* dir, const ConcatResult& r) {
            out << dir << "," << csv_field(render(r.outer)) << "," << csv_field(render(r.inner)) << ","
                << csv_field(render(r.code)) << "," << to_string(r.procedure) << "," << r.code.n() << ","
                << r.code.k() << "," << (r.code.d() ? std::to_string(*r.code.d()) : "") << "," << r.code.c() << "\n";
        };
        row("forward", forward);
        if (backward)
            row("backward", *backward);
        return;
    }
    auto line = [&](const ConcatResult& r) {
        out << fmt::format("{} ▷ {} = {}  {}", render(r.outer), render(r.inner), render(r.code),
                           to_string(r.procedure));
        if (r.distance_floored)
            out << fmt::format("  (distance bound {} floored)", to_string(*r.distance_bound));
        out << "\n";
    };
    line(forward);
    if (backward) {
        line(*backward);
        out << fmt::format("ebits c = {}, c' = {}, c - c' = {}\n", forward.code.c(), backward->code.c(),
                           forward.code.c() - backward->code.c());
    }
}

void run_pseudothreshold(const PseudothresholdOptions& options, std::ostream& out)
{
    ErrorPolynomial f = select_polynomial(options.outer, options.inner, options.poly_file);
    std::optional<double> threshold = pseudothreshold(f, options.tol);

    std::vector<std::string> notes;
    std::optional<Weight2Discrepancy> gap;
    if (options.outer == "rep3132" || options.inner == "rep3132") {
        gap = rep3132_weight2_discrepancy();
        notes.push_back(fmt::format(
            "rep3132 uses the printed weight-2 coefficient {}; enumerating the listed correctable set gives {}",
            to_string(gap->printed), to_string(gap->enumerated)));
    }
    if (!threshold)
        notes.push_back("no crossing p_L(p) = p in (0, 0.5]");

    if (!options.curve_file.empty()) {
        std::ofstream csv(options.curve_file);
        if (!csv)
            throw PreconditionFailure("cannot write curve file '" + options.curve_file + "'");
        csv << "p,p_L\n";
        for (const auto& point : curve(f, 0.0, pseudothreshold_ceiling, options.steps))
            csv << decimal(point.p) << "," << decimal(point.value) << "\n";
    }

    if (options.format == Format::Json) {
        json payload{
            {"outer", options.poly_file.empty() ? options.outer : options.poly_file},
            {"inner", options.inner.empty() ? json(nullptr) : json(options.inner)},
            {"polynomial", to_json(f)},
            {"tol", options.tol},
            {"pseudothreshold", threshold ? json(*threshold) : json(nullptr)},
            {"notes", notes},
        };
        if (gap)
            payload["weight2_discrepancy"] = json{{"printed", to_json(gap->printed)},
                                                  {"enumerated", to_json(gap->enumerated)}};
        if (!options.curve_file.empty())
            payload["curve_file"] = options.curve_file;
        emit_json(out, "pseudothreshold", std::move(payload));
        return;
    }
    if (options.format == Format::Csv) {
        out << "polynomial,pseudothreshold\n"
            << csv_field(f.label()) << "," << (threshold ? decimal(*threshold) : "") << "\n";
        return;
    }
    out << fmt::format("{}  pseudothreshold {}\n", f.label(), threshold ? truncated(*threshold) : "none");
    for (const auto& note : notes)
        out << "note: " << note << "\n";
}

void run_scan(const ScanOptions& options, std::ostream& out)
{
    FamilySpec fam = family(options.outer_family);
    EaCode code = inner_code(options.inner);
    const std::int64_t n_min = options.n_min.value_or(fam.n_min);
    const std::int64_t n_max = options.n_max.value_or(default_scan_max(fam));
    ScanResult scan = options.reversed ? reversed_scan_eahb(code, fam, n_min, n_max)
                                       : scan_eahb(fam, code, n_min, n_max);

    if (options.format == Format::Json) {
        json rows = json::array();
        for (const auto& row : scan.rows)
            rows.push_back(to_json(row));
        emit_json(out, "scan-eahb",
                  json{{"outer", scan.outer},
                       {"inner", scan.inner},
                       {"reversed", options.reversed},
                       {"n_min", n_min},
                       {"n_max", n_max},
                       {"onset", scan.onset ? json(*scan.onset) : json(nullptr)},
                       {"rows", rows}});
        return;
    }
    if (options.format == Format::Csv) {
        out << "n,notation,sphere_count,budget,verdict,phi\n";
        for (const auto& row : scan.rows)
            out << row.n << "," << csv_field(render(row.code)) << "," << to_string(row.sphere_count) << ","
                << to_string(row.budget) << "," << to_string(row.status) << "," << decimal(row.phi) << "\n";
        return;
    }
    out << fmt::format("{} ▷ {}, n in [{}, {}]\n", scan.outer, scan.inner, n_min, n_max);
    out << fmt::format("{:>5}  {:<22}{:<12}{}\n", "n", "code", "verdict", "phi");
    for (const auto& row : scan.rows)
        out << fmt::format("{:>5}  {:<22}{:<12}{}\n", row.n, render(row.code), to_string(row.status),
                           truncated(row.phi));
    out << "onset: " << (scan.onset ? std::to_string(*scan.onset) : "none") << "\n";
}

void run_family(const FamilyOptions& options, std::ostream& out)
{
    FamilySpec fam = family(options.name);
    std::vector<std::int64_t> ns;
    if (fam.constant) {
        ns.push_back(0);
    } else {
        const std::int64_t lo = options.n_min.value_or(fam.n_min);
        const std::int64_t hi = options.n_max.value_or(lo + 10);
        ns = fam.admissible(lo, hi);
        if (ns.empty())
            throw PreconditionFailure(fmt::format("family {} has no member with n in [{}, {}]", fam.name, lo, hi));
    }

    if (options.format == Format::Json) {
        json members = json::array();
        for (std::int64_t n : ns)
            members.push_back(json{{"n", fam.constant ? json(nullptr) : json(n)}, {"code", to_json(fam.at(n))}});
        emit_json(out, "family",
                  json{{"name", fam.name},
                       {"parity", std::string(to_string(fam.parity))},
                       {"n_min", fam.n_min},
                       {"constant", fam.constant},
                       {"members", members}});
        return;
    }
    if (options.format == Format::Csv) {
        out << "n,notation,degeneracy\n";
        for (std::int64_t n : ns) {
            EaCode code = fam.at(n);
            out << (fam.constant ? "" : std::to_string(n)) << "," << csv_field(render(code)) << ","
                << to_string(code.degeneracy()) << "\n";
        }
        return;
    }
    out << fmt::format("{}  parity {}, n >= {}\n", fam.name, to_string(fam.parity), fam.n_min);
    for (std::int64_t n : ns) {
        EaCode code = fam.at(n);
        out << fmt::format("{:>5}  {:<18}{}\n", fam.constant ? std::string("-") : std::to_string(n), render(code),
                           to_string(code.degeneracy()));
    }
}

void run_table1(Format format, std::ostream& out)
{
    struct Row {
        std::string code;
        std::string construction;
        RateSummary rates;
        std::optional<std::string> note;
    };
    std::vector<Row> rows;
    for (const auto& entry : rate_table()) {
        const EaCode& code = entry.construction.code;
        Row row{render(code), render(entry.construction.outer) + " ▷ " + render(entry.construction.inner),
                entry.rates, std::nullopt};
        const std::string exact_form = render(code.with_distance(code.d(), DistanceKind::Exact));
        auto erratum = printed_net_rate_errata().find(exact_form);
        if (erratum != printed_net_rate_errata().end())
            row.note = fmt::format("reference table prints r_n = {}; (k - c)/n = {} truncates to {}", erratum->second,
                                   to_string(entry.rates.net_rate), truncate_decimal(entry.rates.net_rate));
        rows.push_back(std::move(row));
    }

    if (format == Format::Json) {
        json items = json::array();
        for (const auto& row : rows) {
            const RateSummary& r = row.rates;
            json item{
                {"code", row.code},
                {"construction", row.construction},
                {"r", truncate_decimal(r.rate)},
                {"r_e", truncate_decimal(r.entanglement_rate)},
                {"r_n", truncate_decimal(r.net_rate)},
                {"delta", truncate_decimal(*r.relative_distance)},
                {"exact",
                 {{"r", to_json(r.rate)},
                  {"r_e", to_json(r.entanglement_rate)},
                  {"r_n", to_json(r.net_rate)},
                  {"delta", to_json(*r.relative_distance)}}},
            };
            item["note"] = row.note ? json(*row.note) : json(nullptr);
            items.push_back(std::move(item));
        }
        emit_json(out, "table1", json{{"rows", items}});
        return;
    }
    if (format == Format::Csv) {
        out << "code,construction,r,r_e,r_n,delta,note\n";
        for (const auto& row : rows)
            out << csv_field(row.code) << "," << csv_field(row.construction) << "," << truncate_decimal(row.rates.rate)
                << "," << truncate_decimal(row.rates.entanglement_rate) << "," << truncate_decimal(row.rates.net_rate)
                << "," << truncate_decimal(*row.rates.relative_distance) << "," << csv_field(row.note.value_or(""))
                << "\n";
        return;
    }
    out << fmt::format("{:<16}{:<30}{:<9}{:<9}{:<9}{}\n", "code", "construction", "r", "r_e", "r_n", "delta");
    for (const auto& row : rows)
        out << fmt::format("{:<16}{:<30}{:<9}{:<9}{:<9}{}\n", row.code, row.construction,
                           truncate_decimal(row.rates.rate), truncate_decimal(row.rates.entanglement_rate),
                           truncate_decimal(row.rates.net_rate), truncate_decimal(*row.rates.relative_distance));
    for (const auto& row : rows)
        if (row.note)
            out << "note: " << row.code << ": " << *row.note << "\n";
}

void run_curve(const CurveOptions& options, std::ostream& out)
{
    ErrorPolynomial f = select_polynomial(options.outer, options.inner, options.poly_file);
    auto points = curve(f, options.p_min, options.p_max, options.steps);

    if (options.format == Format::Json) {
        json items = json::array();
        for (const auto& point : points)
            items.push_back(json{{"p", point.p}, {"p_L", point.value}});
        emit_json(out, "curve", json{{"label", f.label()}, {"points", items}});
        return;
    }
    if (options.format == Format::Csv) {
        out << "p,p_L\n";
        for (const auto& point : points)
            out << decimal(point.p) << "," << decimal(point.value) << "\n";
        return;
    }
    out << f.label() << "\n" << fmt::format("{:<14}{}\n", "p", "p_L");
    for (const auto& point : points)
        out << fmt::format("{:<14}{}\n", decimal(point.p), decimal(point.value));
}

} // namespace eaqecc::cli
