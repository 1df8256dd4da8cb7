#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eaqecc/bounds.hpp"
#include "eaqecc/concat.hpp"
#include "eaqecc/error_model.hpp"
#include "eaqecc/errors.hpp"
#include "eaqecc/families.hpp"

namespace eaqecc::cli {

using nlohmann::json;

// Big integers travel as decimal strings, rationals as {num, den} strings.
json to_json(const BigInt& value);
json to_json(const Rational& value);
json to_json(const DetailValue& value);
json to_json(const EaCode& code);
json to_json(const EaParameters& params);
json to_json(const ClassicalCode& code);
json to_json(const BoundVerdict& verdict);
json to_json(const BoundReport& report);
json to_json(const ConcatResult& result);
json to_json(const ParameterConcat& result);
json to_json(const ScanRow& row);
json to_json(const ErrorPolynomial& polynomial);

/// {"error": {"kind", "message", ...}} for the standard error stream.
json error_json(const Error& error);
json usage_error_json(std::string_view message);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

/// Fixed decimal text for floating output; keeps output byte-stable.
std::string decimal(double value, int places = 10);

/// Decimal text cut (not rounded) to `places` digits, as used in tables.
std::string truncated(double value, int places = 4);

} // namespace eaqecc::cli
