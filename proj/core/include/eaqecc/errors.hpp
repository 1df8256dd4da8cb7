#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace eaqecc {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed code notation. `position()` is the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A parameter tuple that breaks one of the type invariants.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string invariant, const std::string& message)
        : Error(message), invariant_(std::move(invariant)) {}

    /// Short form of the violated invariant, e.g. "c <= n - k".
    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

/// An operation was called outside its stated domain.
class PreconditionFailure : public Error {
public:
    using Error::Error;
};

} // namespace eaqecc
