#pragma once

#include <cstdint>

namespace asymada {

// Gamma known exactly as num/den, as written on the command line ("2/3").
struct GammaFraction {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const GammaFraction&, const GammaFraction&) = default;
};

}  // namespace asymada
