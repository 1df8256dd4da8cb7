#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace eaqecc::cli {

enum class Format { Table, Json, Csv };

struct CheckOptions {
    std::string code;
    std::optional<bool> degenerate; // --degenerate / --nondegenerate
    Format format = Format::Table;
};

struct ConcatOptions {
    std::string outer;
    std::string inner;
    bool both_orders = false;
    int force = 0; // 0 automatic, 1 divisible, 2 non-divisible
    bool parameters_only = false;
    Format format = Format::Table;
};

struct PseudothresholdOptions {
    std::string outer;
    std::string inner;
    std::string poly_file;
    double tol = 1e-9;
    std::string curve_file;
    int steps = 501;
    Format format = Format::Table;
};

struct ScanOptions {
    std::string outer_family;
    std::string inner;
    std::optional<std::int64_t> n_min;
    std::optional<std::int64_t> n_max;
    bool reversed = false;
    Format format = Format::Table;
};

struct FamilyOptions {
    std::string name;
    std::optional<std::int64_t> n_min;
    std::optional<std::int64_t> n_max;
    Format format = Format::Table;
};

struct CurveOptions {
    std::string outer;
    std::string inner;
    std::string poly_file;
    double p_min = 0.0;
    double p_max = 0.5;
    int steps = 101;
    Format format = Format::Table;
};

// Each command writes its result to `out` and throws eaqecc::Error on domain
// errors.
void run_check(const CheckOptions& options, std::ostream& out);
void run_concat(const ConcatOptions& options, std::ostream& out);
void run_pseudothreshold(const PseudothresholdOptions& options, std::ostream& out);
void run_scan(const ScanOptions& options, std::ostream& out);
void run_family(const FamilyOptions& options, std::ostream& out);
void run_table1(Format format, std::ostream& out);
void run_curve(const CurveOptions& options, std::ostream& out);

} // namespace eaqecc::cli
