#pragma once

#include <string_view>
#include <variant>

#include "eaqecc/code.hpp"

namespace eaqecc {

using AnyCode = std::variant<EaCode, ClassicalCode>;

/// Parses code notation.
///
///   EA form:        "[[" n "," k ["," ["≥" | ">="] d] [";" c] "]]" ["_" q]
///   classical form: "["  n "," k "," d "]" ["_" q]
///
/// Whitespace is accepted between any two tokens. q defaults to 2; an omitted
/// ";c" denotes a standard stabilizer code (c = 0). A "≥" prefix marks the
/// distance as a lower bound. Results carry Degeneracy::Unknown.
///
/// Throws ParseError on malformed text and InvariantViolation when the tuple
/// is well formed but not a valid code.
AnyCode parse_code(std::string_view text);

/// As parse_code, but requires the EA form.
EaCode parse_ea_code(std::string_view text);

/// Reads the EA form without checking the code invariants.
EaParameters parse_ea_parameters(std::string_view text);

/// As parse_code, but requires the classical form.
ClassicalCode parse_classical_code(std::string_view text);

} // namespace eaqecc
