#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "asymada/boost.hpp"
#include "asymada/dataset.hpp"
#include "asymada/metrics.hpp"

namespace asymada {

struct ExperimentConfig {
  std::vector<double> gammas{0.5};
  int t_max = 100;
  // Explicit class-conditional initial weights over the full dataset
  // (positives, negatives). Unset means uniform within each class.
  std::optional<std::vector<double>> d1_pos;
  std::optional<std::vector<double>> d1_neg;
  std::size_t workers = 1;

  // Throws UsageError on an empty gamma list, gamma outside (0,1), t_max < 1
  // or workers == 0.
  void validate() const;
};

// Runs body(i) for i in [0, count) on up to `workers` threads. Exceptions are
// rethrown after all threads finish, lowest index first.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& body);

struct LoocvResult {
  double gamma = 0.5;
  EvalReport report;
  std::vector<int> predictions;  // held-out prediction per canonical sample
};

// Leave-one-out cross-validation. Each fold trains on n-1 samples with gamma
// applied to the fold's own class counts. Results do not depend on the
// worker count. Throws DataError when a class has fewer than 2 samples.
std::vector<LoocvResult> loocv(const Dataset& data, const ExperimentConfig& config);

struct CurveRow {
  int t = 0;
  double bound = 0.0;
  double bound_pos = 0.0;
  double bound_neg = 0.0;
  double train_err = 0.0;
  double train_err_pos = 0.0;
  double train_err_neg = 0.0;
  double test_err = 0.0;
  double test_err_pos = 0.0;
  double test_err_neg = 0.0;

  friend bool operator==(const CurveRow&, const CurveRow&) = default;
};

// Per-round bounds and error rates for one gamma. *_pos / *_neg errors are
// plain FN / FP rates; train_err / test_err are gamma-weighted
// (gamma FN + (1 - gamma) FP).
struct CurveSeries {
  double gamma = 0.5;
  std::vector<CurveRow> rows;

  friend bool operator==(const CurveSeries&, const CurveSeries&) = default;
};

// Trains config.t_max rounds per gamma on `train` and tracks every round
// prefix on both sets. Throws DataError on a dimension mismatch.
std::vector<CurveSeries> curve_run(const ExperimentConfig& config, const Dataset& train, const Dataset& test);

// Curve rows for an already trained run.
std::vector<CurveRow> curve_rows(const TrainResult& run, const Dataset& train, const Dataset& test);

}  // namespace asymada
