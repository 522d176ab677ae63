#include "asymada/stump.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "asymada/errors.hpp"

namespace asymada {
namespace {

double threshold_below(double v) {
  double t = v - 1.0;
  if (!(t < v)) t = std::nextafter(v, -std::numeric_limits<double>::infinity());
  return t;
}

double midpoint(double lo, double hi) {
  double t = (lo + hi) / 2.0;
  if (!std::isfinite(t)) t = lo + (hi - lo) / 2.0;
  // Adjacent doubles: the midpoint can round onto `hi`.
  if (!(t < hi)) t = lo;
  return t;
}

}  // namespace

std::vector<double> enumerate_thresholds(std::span<const double> values) {
  if (values.empty()) return {};
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<double> out;
  out.reserve(sorted.size());
  out.push_back(threshold_below(sorted.front()));
  for (std::size_t j = 1; j < sorted.size(); ++j) out.push_back(midpoint(sorted[j - 1], sorted[j]));
  return out;
}

StumpLearner::StumpLearner(const Dataset& data) : data_(&data) {
  const std::size_t n = data.size();
  index_.resize(data.dim());
  for (std::size_t f = 0; f < data.dim(); ++f) {
    auto& idx = index_[f];
    idx.order.resize(n);
    std::iota(idx.order.begin(), idx.order.end(), 0u);
    std::stable_sort(idx.order.begin(), idx.order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return data[a].features[f] < data[b].features[f];
    });

    for (std::size_t k = 0; k < n; ++k) {
      const double v = data[idx.order[k]].features[f];
      if (k == 0) {
        idx.thresholds.push_back(threshold_below(v));
      } else {
        const double prev = data[idx.order[k - 1]].features[f];
        if (v == prev) continue;
        idx.group_end.push_back(static_cast<std::uint32_t>(k));
        idx.thresholds.push_back(midpoint(prev, v));
      }
    }
    idx.group_end.push_back(static_cast<std::uint32_t>(n));
    if (idx.thresholds.size() > 1) degenerate_ = false;
  }
}

std::optional<StumpFit> StumpLearner::fit(std::span<const double> weights) const {
  const Dataset& data = *data_;
  if (weights.size() != data.size()) {
    throw UsageError("weight vector length does not match dataset size");
  }
  if (degenerate_) return std::nullopt;

  double pos_total = 0.0;
  double neg_total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (data.is_positive(i) ? pos_total : neg_total) += weights[i];
  }
  const double tie = kStumpTieTolerance * (pos_total + neg_total);

  Stump best;
  double best_err = std::numeric_limits<double>::infinity();
  auto consider = [&](std::size_t f, double threshold, int polarity, double err) {
    if (err < best_err - tie) {
      best_err = err;
      best = Stump{f, threshold, polarity};
    }
  };

  for (std::size_t f = 0; f < index_.size(); ++f) {
    const auto& idx = index_[f];
    double pos_left = 0.0;
    double neg_left = 0.0;
    std::size_t k = 0;
    for (std::size_t g = 0; g < idx.thresholds.size(); ++g) {
      // Samples left of thresholds[g] are exactly the groups before g.
      const double t = idx.thresholds[g];
      consider(f, t, +1, pos_left + (neg_total - neg_left));
      consider(f, t, -1, neg_left + (pos_total - pos_left));
      for (; k < idx.group_end[g]; ++k) {
        const std::uint32_t s = idx.order[k];
        (data.is_positive(s) ? pos_left : neg_left) += weights[s];
      }
    }
  }

  return StumpFit{best, weighted_error(data, weights, best)};
}

std::optional<StumpFit> train_stump(const Dataset& data, std::span<const double> weights) {
  return StumpLearner(data).fit(weights);
}

double weighted_error(const Dataset& data, std::span<const double> weights, const Stump& stump) {
  double err = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (stump.predict(data.features(i)) != data.label(i)) err += weights[i];
  }
  return err;
}

}  // namespace asymada
