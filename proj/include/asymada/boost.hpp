#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asymada/classifier.hpp"
#include "asymada/dataset.hpp"
#include "asymada/gamma.hpp"
#include "asymada/stump.hpp"

namespace asymada {

// Errors are clamped into [kEpsMin, 1 - kEpsMin] before computing alpha,
// which caps |alpha| at about 11.51.
inline constexpr double kEpsMin = 1e-10;

// Tolerance used when validating that a class-conditional distribution sums to 1.
inline constexpr double kDistributionTolerance = 1e-12;

// Initial weights split into the positive-class mass gamma and one
// distribution per class. d1_pos has m entries, d1_neg has n - m.
struct WeightInit {
  double gamma = 0.5;
  std::vector<double> d1_pos;
  std::vector<double> d1_neg;
  // Exact gamma, when known. With uniform classes the initial weights are then
  // num / (den m) and (den - num) / (den (n - m)), each rounded once.
  std::optional<GammaFraction> gamma_fraction;

  static WeightInit uniform(std::size_t num_positives, std::size_t num_negatives, double gamma);
  static WeightInit uniform(std::size_t num_positives, std::size_t num_negatives, GammaFraction gamma);

  // Throws UsageError on gamma outside (0,1), negative entries, or class
  // vectors not summing to 1.
  void validate() const;
};

// Splits a global initial distribution over a positives-first dataset into
// (gamma, D1+, D1-). Throws UsageError when either class carries no mass.
WeightInit decompose_weights(std::span<const double> d1, std::size_t num_positives);

// Weight bookkeeping at the start of a round. d_pos / d_neg are the
// class-conditional distributions; p_pos / p_neg / p_global are the products
// of all previous per-class / global normalizers.
struct BoostState {
  double gamma = 0.5;
  std::vector<double> d;
  std::vector<double> d_pos;
  std::vector<double> d_neg;
  double p_pos = 1.0;
  double p_neg = 1.0;
  double p_global = 1.0;
  int round = 1;
};

BoostState init_weights(const Dataset& data, const WeightInit& init);

bool alpha_is_clamped(double eps);

// 1/2 ln((1 - eps) / eps) with eps clamped. Throws UsageError for eps outside [0,1].
double compute_alpha(double eps);

// sum_i d_i y_i h(x_i)
double compute_r(const Dataset& data, std::span<const double> d, const Stump& stump);

struct WeightUpdate {
  BoostState state;
  double z = 1.0;
  double z_pos = 1.0;
  double z_neg = 1.0;
};

// Multiplies every weight by exp(-alpha y h(x)) and renormalizes the global
// distribution and each class-conditional one by its own normalizer.
WeightUpdate update_weights(const BoostState& state, double alpha, const Stump& stump,
                            const Dataset& data);

// Diagnostics for one boosting round. "before" products are P_t, "after"
// products are P_{t+1} = P_t Z_t.
struct RoundRecord {
  int round = 0;
  Stump stump;

  double eps = 0.0;             // direct sum of D_t over misclassified samples (raw, unclamped)
  double eps_pos = 0.0;         // same under D_t+ over positives
  double eps_neg = 0.0;         // same under D_t- over negatives
  double eps_decomposed = 0.0;  // effective-asymmetry mix of eps_pos and eps_neg

  bool alpha_clamped = false;
  double alpha = 0.0;             // from eps
  double alpha_decomposed = 0.0;  // from class-conditional ok / nok masses

  double r = 0.0;              // sum D_t y h
  double r_decomposed = 0.0;   // effective-asymmetry mix of per-class correlations

  double z = 1.0;
  double z_pos = 1.0;
  double z_neg = 1.0;

  double p_pos_before = 1.0;
  double p_neg_before = 1.0;
  double p_global_before = 1.0;
  double p_pos_after = 1.0;
  double p_neg_after = 1.0;
  double p_global_after = 1.0;

  double bound = 1.0;      // P_t Z_t
  double bound_pos = 1.0;  // P_t+ Z_t+
  double bound_neg = 1.0;  // P_t- Z_t-

  // max |gamma P+ D+(i) - P D(i)| and |(1-gamma) P- D-(j) - P D(j)| on the updated state
  double state_residual = 0.0;
  // D_{t+1} mass on the samples this round's stump misclassifies
  double post_update_error = 0.0;

  // Initial-weight training error of the strong classifier after this round,
  // total and per class. Filled in by train().
  double train_error = 0.0;
  double train_error_pos = 0.0;
  double train_error_neg = 0.0;
};

struct RoundResult {
  BoostState state;
  RoundRecord record;
};

// One iteration of the generalized algorithm. Returns std::nullopt when the
// learner finds no discriminating stump.
std::optional<RoundResult> boost_round(const BoostState& state, const Dataset& data,
                                       const WeakLearner& learner);

struct StopPolicy {
  std::optional<double> train_error_target;  // stop once initial-weight training error <= target
  std::optional<double> bound_target;        // stop once the bound <= target
};

enum class StopReason { RoundLimit, TrainErrorTarget, BoundTarget, Degenerate };

std::string_view to_string(StopReason reason);

struct TrainResult {
  StrongClassifier classifier;
  std::vector<RoundRecord> records;
  StopReason reason = StopReason::RoundLimit;
};

// Throws UsageError for t_max < 1 or an init that does not match the dataset.
TrainResult train(const Dataset& data, const WeightInit& init, int t_max,
                  const StopPolicy& stop = {});
TrainResult train(const Dataset& data, const WeightInit& init, int t_max, const StopPolicy& stop,
                  const WeakLearner& learner);

inline constexpr double kIdentityTolerance = 1e-9;

// Largest residuals of the algebraic identities relating the global and the
// class-conditional bookkeeping over a run.
struct IdentityReport {
  double partition = 0.0;         // gamma P+ + (1-gamma) P- = P, and the per-sample weight identities
  double bound_product = 0.0;     // bound_t = prod_{k<=t} Z_k
  double bound_correlation = 0.0; // bound_t = prod_{k<=t} sqrt(1 - r_k^2)
  double eps_mixture = 0.0;       // eps from class-conditional errors vs direct eps
  double alpha_mixture = 0.0;     // alpha from class-conditional masses vs alpha from eps
  std::size_t rounds = 0;
  std::size_t clamped_rounds = 0;

  double max_residual() const;
  bool ok(double tolerance = kIdentityTolerance) const { return max_residual() <= tolerance; }
};

// Correlation-form factor of a round's normalizer: sqrt(1 - r^2) when alpha
// is optimal for the round, otherwise Z evaluated at the clamped alpha.
double correlation_factor(const RoundRecord& rec);

IdentityReport verify_identities(std::span<const RoundRecord> records, const WeightInit& init);

}  // namespace asymada
