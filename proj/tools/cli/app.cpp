#include "app.hpp"

#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "eaqecc/error_model.hpp"
#include "eaqecc/errors.hpp"
#include "serialize.hpp"

namespace eaqecc::cli {

namespace {

const std::map<std::string, Format> format_names{
    {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

CLI::Option* add_format(CLI::App* command, Format& format)
{
    return command->add_option("--format", format, "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
}

int usage_error(std::ostream& err, const std::string& message)
{
    err << usage_error_json(message).dump() << "\n";
    return 2;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parameter calculator for entanglement-assisted and concatenated quantum codes", "eaqecc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "eaqecc 0.1.0");

    const std::vector<std::string> polynomials = polynomial_names();

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Evaluate every bound for a code, e.g. \"[[8,1,5;1]]\" or \"[6,3,4]_4\"");
    check_cmd->add_option("code", check.code, "Code notation")->required();
    auto* degenerate = check_cmd->add_flag_callback("--degenerate", [&] { check.degenerate = true; },
                                                    "Mark the code degenerate");
    auto* nondegenerate = check_cmd->add_flag_callback("--nondegenerate", [&] { check.degenerate = false; },
                                                       "Mark the code nondegenerate");
    degenerate->excludes(nondegenerate);
    add_format(check_cmd, check.format);

    ConcatOptions concat;
    auto* concat_cmd = app.add_subcommand("concat", "Concatenate an outer and an inner code");
    concat_cmd->add_option("outer", concat.outer, "Outer code")->required();
    concat_cmd->add_option("inner", concat.inner, "Inner code")->required();
    concat_cmd->add_flag("--both-orders", concat.both_orders, "Also concatenate inner ▷ outer");
    concat_cmd->add_option("--force", concat.force, "Force procedure 1 (divisible) or 2 (non-divisible)")
        ->check(CLI::IsMember({1, 2}));
    concat_cmd->add_flag("--parameters-only", concat.parameters_only,
                         "Do the arithmetic on tuples that need not be valid codes");
    add_format(concat_cmd, concat.format);

    PseudothresholdOptions pseudo;
    auto* pseudo_cmd = app.add_subcommand("pseudothreshold", "Pseudothreshold of a (concatenated) error polynomial");
    auto* pseudo_outer = pseudo_cmd->add_option("--outer", pseudo.outer, "Outer polynomial name")
                             ->check(CLI::IsMember(polynomials));
    pseudo_cmd->add_option("--inner", pseudo.inner, "Inner polynomial name")->check(CLI::IsMember(polynomials));
    auto* pseudo_file = pseudo_cmd->add_option("--poly-file", pseudo.poly_file,
                                               "JSON coefficient array used as the outer polynomial");
    pseudo_outer->excludes(pseudo_file);
    pseudo_cmd->add_option("--tol", pseudo.tol, "Bisection tolerance")->check(CLI::PositiveNumber);
    pseudo_cmd->add_option("--curve", pseudo.curve_file, "Also write p,p_L samples on [0, 0.5] to this CSV file");
    pseudo_cmd->add_option("--steps", pseudo.steps, "Curve samples")->check(CLI::Range(2, 1000000));
    add_format(pseudo_cmd, pseudo.format);

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan-eahb", "Scan a family concatenation against the EA Hamming bound");
    scan_cmd->add_option("--outer-family", scan.outer_family, "Family name")->required();
    scan_cmd->add_option("--inner", scan.inner, "Named code (C1, C2, C4, ...) or code notation")->required();
    scan_cmd->add_option("--n-min", scan.n_min, "Smallest family index");
    scan_cmd->add_option("--n-max", scan.n_max, "Largest family index");
    scan_cmd->add_flag("--reversed", scan.reversed, "Use the fixed code as the outer code");
    add_format(scan_cmd, scan.format);

    FamilyOptions fam;
    auto* family_cmd = app.add_subcommand("family", "List members of a named family");
    family_cmd->add_option("name", fam.name, "rep_odd, rep_even, rep_odd_ext, rep_even_ext, C1, C2 or C4")
        ->required();
    family_cmd->add_option("--n-min", fam.n_min, "Smallest index");
    family_cmd->add_option("--n-max", fam.n_max, "Largest index");
    add_format(family_cmd, fam.format);

    Format table1_format = Format::Table;
    auto* table1_cmd = app.add_subcommand("table1", "Rates of the two-level concatenations of the small codes");
    add_format(table1_cmd, table1_format);

    CurveOptions curve;
    auto* curve_cmd = app.add_subcommand("curve", "Sample a (concatenated) error polynomial");
    auto* curve_outer = curve_cmd->add_option("--outer", curve.outer, "Outer polynomial name")
                            ->check(CLI::IsMember(polynomials));
    curve_cmd->add_option("--inner", curve.inner, "Inner polynomial name")->check(CLI::IsMember(polynomials));
    auto* curve_file = curve_cmd->add_option("--poly-file", curve.poly_file, "JSON coefficient array");
    curve_outer->excludes(curve_file);
    curve_cmd->add_option("--p-min", curve.p_min, "Lower end")->check(CLI::Range(0.0, 1.0));
    curve_cmd->add_option("--p-max", curve.p_max, "Upper end")->check(CLI::Range(0.0, 1.0));
    curve_cmd->add_option("--steps", curve.steps, "Number of samples")->check(CLI::Range(2, 1000000));
    add_format(curve_cmd, curve.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        return usage_error(err, e.what());
    }

    try {
        if (*check_cmd) {
            run_check(check, out);
        } else if (*concat_cmd) {
            run_concat(concat, out);
        } else if (*pseudo_cmd) {
            if (pseudo.outer.empty() && pseudo.poly_file.empty())
                return usage_error(err, "pseudothreshold: --outer or --poly-file is required");
            run_pseudothreshold(pseudo, out);
        } else if (*scan_cmd) {
            run_scan(scan, out);
        } else if (*family_cmd) {
            run_family(fam, out);
        } else if (*table1_cmd) {
            run_table1(table1_format, out);
        } else if (*curve_cmd) {
            if (curve.outer.empty() && curve.poly_file.empty())
                return usage_error(err, "curve: --outer or --poly-file is required");
            run_curve(curve, out);
        }
    } catch (const Error& e) {
        err << error_json(e).dump() << "\n";
        return 1;
    }
    return 0;
}

} // namespace eaqecc::cli
