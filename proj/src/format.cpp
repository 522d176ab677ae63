#include "asymada/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "asymada/errors.hpp"

namespace asymada {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

double parse_gamma(std::string_view text) {
  text = trim(text);
  double g = 0.0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_double(text.substr(0, slash));
    const double den = parse_double(text.substr(slash + 1));
    if (den == 0.0) throw UsageError("gamma fraction has zero denominator");
    g = num / den;
  } else {
    g = parse_double(text);
  }
  if (!(g > 0.0 && g < 1.0)) {
    throw UsageError("gamma must lie strictly inside (0,1), got '" + std::string(text) + "'");
  }
  return g;
}

std::optional<GammaFraction> parse_gamma_fraction(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto whole = [](std::string_view t, std::uint64_t& v) {
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    return !t.empty() && ec == std::errc() && ptr == t.data() + t.size();
  };
  GammaFraction f;
  if (!whole(trim(text.substr(0, slash)), f.num) || !whole(trim(text.substr(slash + 1)), f.den)) return std::nullopt;
  if (f.num == 0 || f.num >= f.den) return std::nullopt;
  return f;
}

std::string format_percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * fraction);
  return buf;
}

}  // namespace asymada
