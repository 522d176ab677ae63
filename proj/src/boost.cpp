#include "asymada/boost.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "asymada/errors.hpp"

namespace asymada {
namespace {

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void check_distribution(std::span<const double> v, const char* name) {
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw UsageError(std::string(name) + " has a negative or non-finite entry");
    }
  }
  const double s = sum(v);
  if (std::abs(s - 1.0) > kDistributionTolerance) {
    throw UsageError(std::string(name) + " sums to " + std::to_string(s) + ", expected 1");
  }
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw UsageError("gamma must lie strictly inside (0,1), got " + std::to_string(gamma));
  }
}

bool is_uniform(const std::vector<double>& v) {
  const double u = 1.0 / static_cast<double>(v.size());
  return std::all_of(v.begin(), v.end(), [u](double x) { return x == u; });
}

// num / (den m) as a single rounding, when every integer involved is exact in a double.
std::optional<std::pair<double, double>> exact_uniform_weights(const WeightInit& init) {
  if (!init.gamma_fraction || !is_uniform(init.d1_pos) || !is_uniform(init.d1_neg)) return std::nullopt;
  constexpr std::uint64_t kExact = std::uint64_t{1} << 53;
  const auto [num, den] = *init.gamma_fraction;
  const std::uint64_t m = init.d1_pos.size();
  const std::uint64_t k = init.d1_neg.size();
  if (den >= kExact / m || den >= kExact / k) return std::nullopt;
  return std::pair{static_cast<double>(num) / static_cast<double>(den * m),
                   static_cast<double>(den - num) / static_cast<double>(den * k)};
}

}  // namespace

WeightInit WeightInit::uniform(std::size_t num_positives, std::size_t num_negatives, double gamma) {
  if (num_positives == 0 || num_negatives == 0) throw UsageError("both classes must be nonempty");
  check_gamma(gamma);
  WeightInit init;
  init.gamma = gamma;
  init.d1_pos.assign(num_positives, 1.0 / static_cast<double>(num_positives));
  init.d1_neg.assign(num_negatives, 1.0 / static_cast<double>(num_negatives));
  return init;
}

WeightInit WeightInit::uniform(std::size_t num_positives, std::size_t num_negatives, GammaFraction gamma) {
  if (gamma.num == 0 || gamma.num >= gamma.den) throw UsageError("gamma fraction must lie strictly inside (0,1)");
  WeightInit init = uniform(num_positives, num_negatives, gamma.value());
  init.gamma_fraction = gamma;
  return init;
}

void WeightInit::validate() const {
  check_gamma(gamma);
  if (gamma_fraction && (gamma_fraction->num == 0 || gamma_fraction->num >= gamma_fraction->den ||
                         gamma_fraction->value() != gamma)) {
    throw UsageError("gamma fraction does not match gamma");
  }
  if (d1_pos.empty() || d1_neg.empty()) throw UsageError("both class distributions must be nonempty");
  check_distribution(d1_pos, "positive class distribution");
  check_distribution(d1_neg, "negative class distribution");
}

WeightInit decompose_weights(std::span<const double> d1, std::size_t num_positives) {
  if (num_positives < 1 || num_positives + 1 > d1.size()) {
    throw UsageError("number of positives must lie in [1, n-1]");
  }
  for (double x : d1) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw UsageError("initial distribution has a negative entry");
  }
  const double gamma = sum(d1.first(num_positives));
  const double rest = sum(d1.subspan(num_positives));
  if (std::abs(gamma + rest - 1.0) > kDistributionTolerance) {
    throw UsageError("initial distribution does not sum to 1");
  }
  if (!(gamma > 0.0) || !(rest > 0.0)) throw UsageError("a class carries zero initial mass");

  WeightInit init;
  init.gamma = gamma;
  for (double x : d1.first(num_positives)) init.d1_pos.push_back(x / gamma);
  for (double x : d1.subspan(num_positives)) init.d1_neg.push_back(x / (1.0 - gamma));
  return init;
}

BoostState init_weights(const Dataset& data, const WeightInit& init) {
  init.validate();
  if (init.d1_pos.size() != data.num_positives() || init.d1_neg.size() != data.num_negatives()) {
    throw UsageError("weight init sized for m=" + std::to_string(init.d1_pos.size()) +
                     ", n-m=" + std::to_string(init.d1_neg.size()) + " but dataset has m=" +
                     std::to_string(data.num_positives()) + ", n-m=" + std::to_string(data.num_negatives()));
  }
  BoostState s;
  s.gamma = init.gamma;
  s.d_pos = init.d1_pos;
  s.d_neg = init.d1_neg;
  s.d.reserve(data.size());
  if (const auto exact = exact_uniform_weights(init)) {
    s.d.insert(s.d.end(), init.d1_pos.size(), exact->first);
    s.d.insert(s.d.end(), init.d1_neg.size(), exact->second);
    return s;
  }
  for (double w : init.d1_pos) s.d.push_back(init.gamma * w);
  for (double w : init.d1_neg) s.d.push_back((1.0 - init.gamma) * w);
  return s;
}

bool alpha_is_clamped(double eps) { return eps < kEpsMin || eps > 1.0 - kEpsMin; }

double compute_alpha(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw UsageError("weighted error must lie in [0,1]");
  const double e = std::clamp(eps, kEpsMin, 1.0 - kEpsMin);
  return 0.5 * std::log((1.0 - e) / e);
}

double compute_r(const Dataset& data, std::span<const double> d, const Stump& stump) {
  double r = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) r += d[i] * data.label(i) * stump.predict(data.features(i));
  return r;
}

WeightUpdate update_weights(const BoostState& state, double alpha, const Stump& stump, const Dataset& data) {
  const std::size_t n = data.size();
  const std::size_t m = data.num_positives();
  if (state.d.size() != n || state.d_pos.size() != m || state.d_neg.size() != n - m) {
    throw UsageError("boosting state does not match dataset");
  }
  const double shrink = std::exp(-alpha);  // correctly classified
  const double grow = std::exp(alpha);     // misclassified
  if (!std::isfinite(shrink) || !std::isfinite(grow)) throw UsageError("alpha too large");

  std::vector<double> factor(n);
  for (std::size_t i = 0; i < n; ++i) {
    factor[i] = stump.predict(data.features(i)) == data.label(i) ? shrink : grow;
  }

  WeightUpdate u;
  u.state = state;
  BoostState& s = u.state;

  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) z += state.d[i] * factor[i];
  double z_pos = 0.0;
  for (std::size_t i = 0; i < m; ++i) z_pos += state.d_pos[i] * factor[i];
  double z_neg = 0.0;
  for (std::size_t j = 0; j < n - m; ++j) z_neg += state.d_neg[j] * factor[m + j];

  for (std::size_t i = 0; i < n; ++i) s.d[i] = state.d[i] * factor[i] / z;
  for (std::size_t i = 0; i < m; ++i) s.d_pos[i] = state.d_pos[i] * factor[i] / z_pos;
  for (std::size_t j = 0; j < n - m; ++j) s.d_neg[j] = state.d_neg[j] * factor[m + j] / z_neg;

  s.p_global = state.p_global * z;
  s.p_pos = state.p_pos * z_pos;
  s.p_neg = state.p_neg * z_neg;
  s.round = state.round + 1;

  u.z = z;
  u.z_pos = z_pos;
  u.z_neg = z_neg;
  return u;
}

std::optional<RoundResult> boost_round(const BoostState& state, const Dataset& data, const WeakLearner& learner) {
  const std::size_t n = data.size();
  const std::size_t m = data.num_positives();
  const double gamma = state.gamma;

  const auto fit = learner.fit(state.d);
  if (!fit) return std::nullopt;
  const Stump& h = fit->stump;

  std::vector<int> hy(n);  // y_i h(x_i)
  for (std::size_t i = 0; i < n; ++i) hy[i] = data.label(i) * h.predict(data.features(i));

  RoundRecord rec;
  rec.round = state.round;
  rec.stump = h;

  double eps = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (hy[i] < 0) eps += state.d[i];
  }
  double pos_nok = 0.0, pos_ok = 0.0, pos_corr = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    (hy[i] < 0 ? pos_nok : pos_ok) += state.d_pos[i];
    pos_corr += state.d_pos[i] * hy[i];
  }
  double neg_nok = 0.0, neg_ok = 0.0, neg_corr = 0.0;
  for (std::size_t j = 0; j < n - m; ++j) {
    (hy[m + j] < 0 ? neg_nok : neg_ok) += state.d_neg[j];
    neg_corr += state.d_neg[j] * hy[m + j];
  }

  // Effective asymmetry: class-level weights combining gamma with past rounds.
  const double eff_pos = gamma * state.p_pos;
  const double eff_neg = (1.0 - gamma) * state.p_neg;
  const double eff_total = eff_pos + eff_neg;

  rec.eps = eps;
  rec.eps_pos = pos_nok;
  rec.eps_neg = neg_nok;
  rec.eps_decomposed = (eff_pos / eff_total) * pos_nok + (eff_neg / eff_total) * neg_nok;

  rec.r = compute_r(data, state.d, h);
  rec.r_decomposed = (eff_pos / eff_total) * pos_corr + (eff_neg / eff_total) * neg_corr;

  rec.alpha_clamped = alpha_is_clamped(eps);
  rec.alpha = compute_alpha(std::clamp(eps, 0.0, 1.0));
  {
    double ok = eff_pos * pos_ok + eff_neg * neg_ok;
    double nok = eff_pos * pos_nok + eff_neg * neg_nok;
    const double mass = ok + nok;
    if (nok < kEpsMin * mass) {
      nok = kEpsMin * mass;
      ok = mass - nok;
    } else if (ok < kEpsMin * mass) {
      ok = kEpsMin * mass;
      nok = mass - ok;
    }
    rec.alpha_decomposed = 0.5 * std::log(ok / nok);
  }

  WeightUpdate u = update_weights(state, rec.alpha, h, data);
  const BoostState& next = u.state;

  rec.z = u.z;
  rec.z_pos = u.z_pos;
  rec.z_neg = u.z_neg;
  rec.p_pos_before = state.p_pos;
  rec.p_neg_before = state.p_neg;
  rec.p_global_before = state.p_global;
  rec.p_pos_after = next.p_pos;
  rec.p_neg_after = next.p_neg;
  rec.p_global_after = next.p_global;
  rec.bound = state.p_global * u.z;
  rec.bound_pos = state.p_pos * u.z_pos;
  rec.bound_neg = state.p_neg * u.z_neg;

  double residual = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    residual = std::max(residual, std::abs(gamma * next.p_pos * next.d_pos[i] - next.p_global * next.d[i]));
  }
  for (std::size_t j = 0; j < n - m; ++j) {
    residual = std::max(residual,
                        std::abs((1.0 - gamma) * next.p_neg * next.d_neg[j] - next.p_global * next.d[m + j]));
  }
  rec.state_residual = residual;

  double after = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (hy[i] < 0) after += next.d[i];
  }
  rec.post_update_error = after;

  return RoundResult{std::move(u.state), rec};
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::RoundLimit: return "round_limit";
    case StopReason::TrainErrorTarget: return "train_error_target";
    case StopReason::BoundTarget: return "bound_target";
    case StopReason::Degenerate: return "degenerate";
  }
  return "unknown";
}

TrainResult train(const Dataset& data, const WeightInit& init, int t_max, const StopPolicy& stop) {
  const StumpLearner learner(data);
  return train(data, init, t_max, stop, learner);
}

TrainResult train(const Dataset& data, const WeightInit& init, int t_max, const StopPolicy& stop,
                  const WeakLearner& learner) {
  if (t_max < 1) throw UsageError("number of rounds must be at least 1");
  if (data.num_positives() == 0 || data.num_negatives() == 0) {
    throw DataError("training requires both classes");
  }
  BoostState state = init_weights(data, init);

  const std::size_t n = data.size();
  const std::size_t m = data.num_positives();
  std::vector<double> scores(n, 0.0);

  TrainResult out;
  out.classifier = StrongClassifier(data.dim(), init.gamma);
  out.records.reserve(static_cast<std::size_t>(t_max));

  for (int t = 1; t <= t_max; ++t) {
    auto step = boost_round(state, data, learner);
    if (!step) {
      out.reason = StopReason::Degenerate;
      return out;
    }
    RoundRecord& rec = step->record;
    out.classifier.add(rec.alpha, rec.stump);

    double err_pos = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] += rec.alpha * rec.stump.predict(data.features(i));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!(scores[i] > 0.0)) err_pos += init.d1_pos[i];
    }
    double err_neg = 0.0;
    for (std::size_t j = 0; j < n - m; ++j) {
      if (scores[m + j] > 0.0) err_neg += init.d1_neg[j];
    }
    rec.train_error_pos = err_pos;
    rec.train_error_neg = err_neg;
    rec.train_error = init.gamma * err_pos + (1.0 - init.gamma) * err_neg;

    out.records.push_back(rec);
    state = std::move(step->state);

    if (stop.train_error_target && rec.train_error <= *stop.train_error_target) {
      out.reason = StopReason::TrainErrorTarget;
      return out;
    }
    if (stop.bound_target && rec.bound <= *stop.bound_target) {
      out.reason = StopReason::BoundTarget;
      return out;
    }
  }
  out.reason = StopReason::RoundLimit;
  return out;
}

double IdentityReport::max_residual() const {
  return std::max({partition, bound_product, bound_correlation, eps_mixture, alpha_mixture});
}

double correlation_factor(const RoundRecord& rec) {
  if (!rec.alpha_clamped) return std::sqrt(std::max(0.0, 1.0 - rec.r * rec.r));
  // Z = sum_ok D e^{-alpha} + sum_nok D e^{alpha} with the ok / nok masses written through r.
  return 0.5 * (1.0 + rec.r) * std::exp(-rec.alpha) + 0.5 * (1.0 - rec.r) * std::exp(rec.alpha);
}

IdentityReport verify_identities(std::span<const RoundRecord> records, const WeightInit& init) {
  const double gamma = init.gamma;
  IdentityReport rep;
  rep.rounds = records.size();

  double prod_z = 1.0;
  double prod_r = 1.0;
  for (const auto& rec : records) {
    if (rec.alpha_clamped) ++rep.clamped_rounds;

    rep.partition = std::max({rep.partition,
                              std::abs(gamma * rec.p_pos_before + (1.0 - gamma) * rec.p_neg_before -
                                       rec.p_global_before),
                              std::abs(gamma * rec.p_pos_after + (1.0 - gamma) * rec.p_neg_after -
                                       rec.p_global_after),
                              rec.state_residual});

    prod_z *= rec.z;
    prod_r *= correlation_factor(rec);
    rep.bound_product = std::max(rep.bound_product, std::abs(rec.bound - prod_z));
    rep.bound_correlation = std::max(rep.bound_correlation, std::abs(rec.bound - prod_r));

    rep.eps_mixture = std::max(rep.eps_mixture, std::abs(rec.eps_decomposed - rec.eps));
    rep.alpha_mixture = std::max(rep.alpha_mixture, std::abs(rec.alpha_decomposed - rec.alpha));
  }
  return rep;
}

}  // namespace asymada
