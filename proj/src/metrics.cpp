#include "asymada/metrics.hpp"

#include "asymada/errors.hpp"

namespace asymada {

double asymmetric_error(double gamma, double fn_rate, double fp_rate) {
  return gamma * fn_rate + (1.0 - gamma) * fp_rate;
}

EvalReport EvalReport::from_counts(const ConfusionCounts& c, double gamma) {
  const std::size_t pos = c.tp + c.fn;
  const std::size_t neg = c.tn + c.fp;
  if (pos == 0 || neg == 0) throw UsageError("evaluation requires both classes to be present");
  EvalReport r;
  r.counts = c;
  r.fn_rate = static_cast<double>(c.fn) / static_cast<double>(pos);
  r.fp_rate = static_cast<double>(c.fp) / static_cast<double>(neg);
  r.cl_err = static_cast<double>(c.fn + c.fp) / static_cast<double>(pos + neg);
  r.as_err = asymmetric_error(gamma, r.fn_rate, r.fp_rate);
  return r;
}

EvalReport evaluate(const StrongClassifier& classifier, const Dataset& data, double gamma) {
  ConfusionCounts c;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int pred = classifier.classify(data.features(i));
    if (data.is_positive(i)) {
      ++(pred > 0 ? c.tp : c.fn);
    } else {
      ++(pred > 0 ? c.fp : c.tn);
    }
  }
  return EvalReport::from_counts(c, gamma);
}

ClassErrors per_class_training_error(const StrongClassifier& classifier, const Dataset& data,
                                     const WeightInit& init) {
  if (init.d1_pos.size() != data.num_positives() || init.d1_neg.size() != data.num_negatives()) {
    throw UsageError("weight init does not match dataset");
  }
  const std::size_t m = data.num_positives();
  ClassErrors e;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const bool wrong = classifier.classify(data.features(i)) != data.label(i);
    if (!wrong) continue;
    if (i < m) {
      e.e_pos += init.d1_pos[i];
    } else {
      e.e_neg += init.d1_neg[i - m];
    }
  }
  e.e_weighted = init.gamma * e.e_pos + (1.0 - init.gamma) * e.e_neg;
  return e;
}

}  // namespace asymada
