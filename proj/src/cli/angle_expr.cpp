#include <cctype>
#include <charconv>
#include <cmath>

#include "pulsesmith/cli.hpp"
#include "pulsesmith/error.hpp"
#include "pulsesmith/format.hpp"

namespace pulsesmith::cli {

namespace {

[[noreturn]] void bad_angle(std::string_view text) {
    throw_validation("invalid angle '" + std::string(text) +
                     "' (expected a decimal, pi, <a>pi, pi/<b> or <a>pi/<b>)");
}

// Unsigned decimal literal; rejects inf/nan and hex forms that from_chars would accept.
std::optional<double> parse_decimal(std::string_view s) {
    if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.')) return std::nullopt;
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-')) {
            return std::nullopt;
        }
    }
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace

AngleExpr AngleExpr::parse(std::string_view text) {
    std::string_view body = text;
    double sign = 1.0;
    if (!body.empty() && body.front() == '-') {
        sign = -1.0;
        body.remove_prefix(1);
    }

    const std::size_t pi_at = body.find("pi");
    if (pi_at == std::string_view::npos) {
        const auto v = parse_decimal(body);
        if (!v) bad_angle(text);
        return {std::string(text), sign * *v};
    }

    double factor = 1.0;
    if (pi_at > 0) {
        const auto a = parse_decimal(body.substr(0, pi_at));
        if (!a || !(*a > 0.0)) bad_angle(text);
        factor = *a;
    }
    double value = factor * kPi;
    std::string_view rest = body.substr(pi_at + 2);
    if (!rest.empty()) {
        if (rest.front() != '/') bad_angle(text);
        const auto b = parse_decimal(rest.substr(1));
        if (!b || !(*b > 0.0)) bad_angle(text);
        value /= *b;
    }
    return {std::string(text), sign * value};
}

std::string format_angle(double radians) { return format_double(radians); }

AxisSpec parse_axis(std::string_view text) {
    const std::size_t first = text.find(':');
    const std::size_t second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw_validation("invalid axis '" + std::string(text) + "' (expected min:max:count)");
    }
    const double lo = AngleExpr::parse(text.substr(0, first)).radians;
    const double hi = AngleExpr::parse(text.substr(first + 1, second - first - 1)).radians;
    const std::string_view count_text = text.substr(second + 1);
    std::size_t count = 0;
    const auto res = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (res.ec != std::errc{} || res.ptr != count_text.data() + count_text.size() || count < 2) {
        throw_validation("invalid axis '" + std::string(text) + "' (count must be an integer >= 2)");
    }
    if (!(hi > lo)) throw_validation("invalid axis '" + std::string(text) + "' (max must exceed min)");
    return {lo, hi, count};
}

}  // namespace pulsesmith::cli
