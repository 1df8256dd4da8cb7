#include "eaqecc/notation.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>

#include "eaqecc/errors.hpp"

namespace eaqecc {

namespace {

constexpr std::int64_t max_parameter = 1'000'000'000'000LL;

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }

    bool peek(char ch)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    bool accept(std::string_view token)
    {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!accept(token))
            fail("expected '" + std::string(token) + "'");
    }

    std::int64_t integer(const char* what)
    {
        skip_space();
        std::size_t start = pos_;
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > max_parameter) {
                pos_ = start;
                fail(std::string(what) + " is too large");
            }
            ++pos_;
        }
        if (pos_ == start)
            fail(std::string("expected integer for ") + what);
        return value;
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError("syntax error: " + message, pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::int64_t alphabet_suffix(Cursor& cursor)
{
    if (cursor.accept("_"))
        return cursor.integer("alphabet size q");
    return 2;
}

EaParameters parse_ea(Cursor& cursor)
{
    std::int64_t n = cursor.integer("n");
    cursor.expect(",");
    std::int64_t k = cursor.integer("k");

    std::optional<std::int64_t> d;
    DistanceKind kind = DistanceKind::Exact;
    if (cursor.accept(",")) {
        if (cursor.accept("≥") || cursor.accept(">="))
            kind = DistanceKind::LowerBound;
        d = cursor.integer("d");
    }

    std::int64_t c = 0;
    if (cursor.accept(";"))
        c = cursor.integer("c");

    cursor.expect("]");
    cursor.expect("]");
    std::int64_t q = alphabet_suffix(cursor);
    if (!cursor.at_end())
        cursor.fail("unexpected trailing characters");
    return EaParameters{n, k, d, c, q, kind};
}

ClassicalCode parse_classical(Cursor& cursor)
{
    std::int64_t n = cursor.integer("n");
    cursor.expect(",");
    std::int64_t k = cursor.integer("k");
    std::optional<std::int64_t> d;
    if (cursor.accept(","))
        d = cursor.integer("d");
    cursor.expect("]");
    std::int64_t q = alphabet_suffix(cursor);
    if (!cursor.at_end())
        cursor.fail("unexpected trailing characters");
    if (!d)
        throw InvariantViolation("classical d present",
                                 "invariant violation: a classical code needs its distance d");
    return ClassicalCode(n, k, *d, q);
}

} // namespace

AnyCode parse_code(std::string_view text)
{
    Cursor cursor(text);
    cursor.expect("[");
    if (cursor.accept("["))
        return EaCode(parse_ea(cursor));
    return parse_classical(cursor);
}

EaParameters parse_ea_parameters(std::string_view text)
{
    Cursor cursor(text);
    cursor.expect("[");
    cursor.expect("[");
    return parse_ea(cursor);
}

EaCode parse_ea_code(std::string_view text)
{
    AnyCode code = parse_code(text);
    if (auto* ea = std::get_if<EaCode>(&code))
        return *ea;
    throw ParseError("syntax error: expected an EA code \"[[n,k,d;c]]\"", 0);
}

ClassicalCode parse_classical_code(std::string_view text)
{
    AnyCode code = parse_code(text);
    if (auto* classical = std::get_if<ClassicalCode>(&code))
        return *classical;
    throw ParseError("syntax error: expected a classical code \"[n,k,d]_q\"", 0);
}

} // namespace eaqecc
