#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "asymada/gamma.hpp"

namespace asymada {

// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

// Parses a full decimal string; throws UsageError on trailing junk.
double parse_double(std::string_view text);

// Accepts a decimal ("0.875") or a fraction ("7/8").
double parse_gamma(std::string_view text);

// The exact fraction when `text` is "a/b" with integers 0 < a < b, else nullopt.
std::optional<GammaFraction> parse_gamma_fraction(std::string_view text);

// "12.34%" style, two decimals.
std::string format_percent(double fraction);

}  // namespace asymada
