#include "steerlab/angles.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace steerlab {

namespace {

constexpr double kPi = std::numbers::pi;

bool parse_integer(const std::string& s, std::size_t& pos, long& out) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stol(s.substr(start, pos - start));
    return true;
}

}  // namespace

std::optional<double> parse_angle(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1.0;
        ++pos;
    }
    const std::size_t pi_at = text.find("pi", pos);
    if (pi_at == std::string::npos) {
        try {
            std::size_t used = 0;
            const double v = std::stod(text.substr(pos), &used);
            if (used != text.size() - pos) return std::nullopt;
            return sign * v;
        } catch (...) {
            return std::nullopt;
        }
    }
    long num = 1;
    if (pi_at > pos) {
        std::size_t cursor = pos;
        if (!parse_integer(text, cursor, num) || cursor != pi_at) return std::nullopt;
    }
    pos = pi_at + 2;
    long den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/') return std::nullopt;
        ++pos;
        std::size_t cursor = pos;
        if (!parse_integer(text, cursor, den) || cursor != text.size() || den == 0) {
            return std::nullopt;
        }
    }
    return sign * kPi * static_cast<double>(num) / static_cast<double>(den);
}

std::string format_angle(double radians) {
    const double ratio = radians / kPi;
    // Continued-fraction sweep for a small rational p/q close to ratio.
    for (long q = 1; q <= 360; ++q) {
        const double p_real = ratio * static_cast<double>(q);
        const long p = std::lround(p_real);
        if (std::abs(p_real - static_cast<double>(p)) >
            1e-9 * static_cast<double>(q)) {
            continue;
        }
        if (p == 0) return "0";
        std::string sign = p < 0 ? "-" : "";
        const long ap = std::labs(p);
        std::string head = ap == 1 ? "pi" : std::to_string(ap) + "pi";
        if (q == 1) return sign + head;
        return sign + head + "/" + std::to_string(q);
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", radians);
    return buf;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace steerlab
