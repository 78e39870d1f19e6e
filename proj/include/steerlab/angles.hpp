#pragma once

#include <optional>
#include <string>

namespace steerlab {

// Parses "7pi/36", "-pi/12", "pi", "2pi", "0.61" (radians). Whitespace-free.
std::optional<double> parse_angle(const std::string& text);

// Canonical textual form: a small rational multiple of pi when one matches
// to 1e-9 (denominator up to 360), otherwise a decimal.
std::string format_angle(double radians);

// Round-trip-exact decimal for file output.
std::string format_double(double value);

}  // namespace steerlab
