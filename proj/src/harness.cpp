#include "asymada/harness.hpp"

#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "asymada/errors.hpp"

namespace asymada {
namespace {

std::vector<double> drop_and_renormalize(const std::vector<double>& w, std::size_t drop) {
  std::vector<double> out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != drop) out.push_back(w[i]);
  }
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  if (!(total > 0.0)) throw DataError("fold leaves a class with zero initial weight");
  for (double& x : out) x /= total;
  return out;
}

WeightInit fold_init(const Dataset& data, const ExperimentConfig& config, double gamma, std::size_t held_out) {
  const std::size_t m = data.num_positives();
  if (!config.d1_pos) {
    const std::size_t m_fold = held_out < m ? m - 1 : m;
    const std::size_t neg_fold = data.size() - 1 - m_fold;
    return WeightInit::uniform(m_fold, neg_fold, gamma);
  }
  WeightInit init;
  init.gamma = gamma;
  if (held_out < m) {
    init.d1_pos = drop_and_renormalize(*config.d1_pos, held_out);
    init.d1_neg = *config.d1_neg;
  } else {
    init.d1_pos = *config.d1_pos;
    init.d1_neg = drop_and_renormalize(*config.d1_neg, held_out - m);
  }
  return init;
}

struct Tally {
  std::size_t pos = 0;
  std::size_t pos_wrong = 0;
  std::size_t neg = 0;
  std::size_t neg_wrong = 0;

  double fn() const { return pos ? static_cast<double>(pos_wrong) / static_cast<double>(pos) : 0.0; }
  double fp() const { return neg ? static_cast<double>(neg_wrong) / static_cast<double>(neg) : 0.0; }
};

}  // namespace

void ExperimentConfig::validate() const {
  if (gammas.empty()) throw UsageError("at least one gamma is required");
  for (double g : gammas) {
    if (!(g > 0.0 && g < 1.0)) throw UsageError("every gamma must lie strictly inside (0,1)");
  }
  if (t_max < 1) throw UsageError("number of rounds must be at least 1");
  if (workers == 0) throw UsageError("worker count must be at least 1");
  if (d1_pos.has_value() != d1_neg.has_value()) {
    throw UsageError("explicit initial weights need both class distributions");
  }
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& body) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(workers, count);
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<LoocvResult> loocv(const Dataset& data, const ExperimentConfig& config) {
  config.validate();
  if (data.num_positives() < 2 || data.num_negatives() < 2) {
    throw DataError("leave-one-out needs at least 2 samples per class");
  }
  if (config.d1_pos) {
    WeightInit full{0.5, *config.d1_pos, *config.d1_neg, {}};
    full.validate();
    if (full.d1_pos.size() != data.num_positives() || full.d1_neg.size() != data.num_negatives()) {
      throw UsageError("explicit initial weights do not match the dataset");
    }
  }

  const std::size_t n = data.size();
  const std::size_t g_count = config.gammas.size();
  // predictions[fold * g_count + g]
  std::vector<int> predictions(n * g_count, 0);

  parallel_for(n, config.workers, [&](std::size_t fold) {
    const Dataset train_set = data.without(fold);
    const StumpLearner learner(train_set);
    for (std::size_t g = 0; g < g_count; ++g) {
      const WeightInit init = fold_init(data, config, config.gammas[g], fold);
      const TrainResult run = train(train_set, init, config.t_max, {}, learner);
      predictions[fold * g_count + g] = run.classifier.classify(data.features(fold));
    }
  });

  std::vector<LoocvResult> out(g_count);
  for (std::size_t g = 0; g < g_count; ++g) {
    LoocvResult& r = out[g];
    r.gamma = config.gammas[g];
    r.predictions.resize(n);
    ConfusionCounts c;
    for (std::size_t i = 0; i < n; ++i) {
      const int pred = predictions[i * g_count + g];
      r.predictions[i] = pred;
      if (data.is_positive(i)) {
        ++(pred > 0 ? c.tp : c.fn);
      } else {
        ++(pred > 0 ? c.fp : c.tn);
      }
    }
    r.report = EvalReport::from_counts(c, r.gamma);
  }
  return out;
}

std::vector<CurveRow> curve_rows(const TrainResult& run, const Dataset& train_set, const Dataset& test_set) {
  const double gamma = run.classifier.gamma_used();
  std::vector<double> train_scores(train_set.size(), 0.0);
  std::vector<double> test_scores(test_set.size(), 0.0);

  auto advance = [](const Dataset& data, std::vector<double>& scores, const WeightedStump& ws) {
    Tally tally;
    for (std::size_t i = 0; i < data.size(); ++i) {
      scores[i] += ws.alpha * ws.stump.predict(data.features(i));
      const bool predicted_positive = scores[i] > 0.0;
      if (data.is_positive(i)) {
        ++tally.pos;
        if (!predicted_positive) ++tally.pos_wrong;
      } else {
        ++tally.neg;
        if (predicted_positive) ++tally.neg_wrong;
      }
    }
    return tally;
  };

  std::vector<CurveRow> rows;
  rows.reserve(run.records.size());
  for (std::size_t t = 0; t < run.records.size(); ++t) {
    const RoundRecord& rec = run.records[t];
    const WeightedStump& ws = run.classifier.rounds()[t];
    const Tally tr = advance(train_set, train_scores, ws);
    const Tally te = advance(test_set, test_scores, ws);

    CurveRow row;
    row.t = rec.round;
    row.bound = rec.bound;
    row.bound_pos = rec.bound_pos;
    row.bound_neg = rec.bound_neg;
    row.train_err_pos = tr.fn();
    row.train_err_neg = tr.fp();
    row.train_err = asymmetric_error(gamma, row.train_err_pos, row.train_err_neg);
    row.test_err_pos = te.fn();
    row.test_err_neg = te.fp();
    row.test_err = asymmetric_error(gamma, row.test_err_pos, row.test_err_neg);
    rows.push_back(row);
  }
  return rows;
}

std::vector<CurveSeries> curve_run(const ExperimentConfig& config, const Dataset& train_set,
                                   const Dataset& test_set) {
  config.validate();
  if (train_set.dim() != test_set.dim()) {
    throw DataError("train set has " + std::to_string(train_set.dim()) + " features, test set has " +
                    std::to_string(test_set.dim()));
  }
  const StumpLearner learner(train_set);
  std::vector<CurveSeries> out(config.gammas.size());
  parallel_for(config.gammas.size(), config.workers, [&](std::size_t g) {
    const double gamma = config.gammas[g];
    WeightInit init = config.d1_pos ? WeightInit{gamma, *config.d1_pos, *config.d1_neg, {}}
                                    : WeightInit::uniform(train_set.num_positives(),
                                                          train_set.num_negatives(), gamma);
    const TrainResult run = train(train_set, init, config.t_max, {}, learner);
    out[g].gamma = gamma;
    out[g].rows = curve_rows(run, train_set, test_set);
  });
  return out;
}

}  // namespace asymada
