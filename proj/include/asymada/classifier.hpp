#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "asymada/stump.hpp"

namespace asymada {

struct WeightedStump {
  double alpha = 0.0;
  Stump stump;

  friend bool operator==(const WeightedStump&, const WeightedStump&) = default;
};

// H(x) = sign(sum_t alpha_t h_t(x)). A score of exactly zero is classified -1.
class StrongClassifier {
 public:
  StrongClassifier() = default;
  StrongClassifier(std::size_t dim, double gamma_used) : dim_(dim), gamma_used_(gamma_used) {}

  void add(double alpha, const Stump& stump) { rounds_.push_back({alpha, stump}); }

  // Throws UsageError when x does not have dim() components.
  double score(std::span<const double> x) const;
  int classify(std::span<const double> x) const { return score(x) > 0.0 ? 1 : -1; }

  // The first t rounds of this classifier.
  StrongClassifier truncated(std::size_t t) const;

  std::size_t size() const { return rounds_.size(); }
  bool empty() const { return rounds_.empty(); }
  std::size_t dim() const { return dim_; }
  double gamma_used() const { return gamma_used_; }
  const std::vector<WeightedStump>& rounds() const { return rounds_; }

 private:
  std::vector<WeightedStump> rounds_;
  std::size_t dim_ = 0;
  double gamma_used_ = 0.5;
};

}  // namespace asymada
