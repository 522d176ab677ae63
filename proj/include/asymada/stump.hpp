#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "asymada/dataset.hpp"

namespace asymada {

// Single-feature threshold rule: polarity if x[feature] > threshold, else -polarity.
struct Stump {
  std::size_t feature = 0;
  double threshold = 0.0;
  int polarity = 1;

  int predict(std::span<const double> x) const {
    return x[feature] > threshold ? polarity : -polarity;
  }

  friend bool operator==(const Stump&, const Stump&) = default;
};

struct StumpFit {
  Stump stump;
  double eps = 0.0;  // weighted error of `stump` under the weights it was fit on
};

// Candidate thresholds for one feature: one below the minimum and the
// midpoints between consecutive distinct values, in ascending order.
std::vector<double> enumerate_thresholds(std::span<const double> values);

// Weighted errors closer than this fraction of the total weight are treated
// as equal, so that the deterministic tie order decides instead of rounding.
inline constexpr double kStumpTieTolerance = 1e-12;

// Weak-learner interface consumed by the boosting engine.
class WeakLearner {
 public:
  virtual ~WeakLearner() = default;
  // Best stump under `weights`, or std::nullopt if no stump discriminates.
  virtual std::optional<StumpFit> fit(std::span<const double> weights) const = 0;
};

// Exact weighted decision-stump search. The per-feature sort order is built
// once at construction and is read-only afterwards, so one learner can serve
// concurrent fit() calls.
//
// Among stumps of equal error the lowest feature index wins, then the lowest
// threshold, then polarity +1.
class StumpLearner final : public WeakLearner {
 public:
  explicit StumpLearner(const Dataset& data);

  // Returns std::nullopt when every feature is constant over the dataset.
  std::optional<StumpFit> fit(std::span<const double> weights) const override;

  const Dataset& dataset() const { return *data_; }

 private:
  struct FeatureIndex {
    std::vector<std::uint32_t> order;      // sample indices sorted by value
    std::vector<std::uint32_t> group_end;  // end offset (in order) of each run of equal values
    std::vector<double> thresholds;        // thresholds[j] sits just below group j
  };

  const Dataset* data_;
  std::vector<FeatureIndex> index_;
  bool degenerate_ = true;
};

// One-shot convenience wrapper over StumpLearner.
std::optional<StumpFit> train_stump(const Dataset& data, std::span<const double> weights);

// Weighted error of a fixed stump, summed in sample order.
double weighted_error(const Dataset& data, std::span<const double> weights, const Stump& stump);

}  // namespace asymada
