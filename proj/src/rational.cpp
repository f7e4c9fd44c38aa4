#include "dwidth/rational.hpp"

#include <charconv>

namespace dwidth {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw PreconditionError("not a rational number: " + std::string(whole));
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return {parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text)};
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto fraction = text.substr(dot + 1);
        if (fraction.size() > 12 || (!fraction.empty() && (fraction[0] == '-' || fraction[0] == '+'))) {
            throw PreconditionError("not a rational number: " + std::string(text));
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fraction.size(); ++i) {
            scale *= 10;
        }
        const auto head = text.substr(0, dot);
        const bool negative = !head.empty() && head[0] == '-';
        const std::int64_t whole = head.empty() || head == "-" ? 0 : parse_integer(head, text);
        const std::int64_t part = fraction.empty() ? 0 : parse_integer(fraction, text);
        const std::int64_t magnitude = (negative ? -whole : whole) * scale + part;
        return {negative ? -magnitude : magnitude, scale};
    }
    return {parse_integer(text, text)};
}

}  // namespace dwidth
