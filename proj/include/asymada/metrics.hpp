#pragma once

#include <cstddef>

#include "asymada/boost.hpp"
#include "asymada/classifier.hpp"
#include "asymada/dataset.hpp"

namespace asymada {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Rates are fractions of each class population; as_err = gamma fn + (1 - gamma) fp.
struct EvalReport {
  double fn_rate = 0.0;
  double fp_rate = 0.0;
  double cl_err = 0.0;
  double as_err = 0.0;
  ConfusionCounts counts;

  // Throws UsageError if either class has no samples.
  static EvalReport from_counts(const ConfusionCounts& counts, double gamma);
};

double asymmetric_error(double gamma, double fn_rate, double fp_rate);

EvalReport evaluate(const StrongClassifier& classifier, const Dataset& data, double gamma);

struct ClassErrors {
  double e_pos = 0.0;
  double e_neg = 0.0;
  double e_weighted = 0.0;
};

// Training error weighted by the initial class-conditional distributions.
ClassErrors per_class_training_error(const StrongClassifier& classifier, const Dataset& data,
                                     const WeightInit& init);

}  // namespace asymada
