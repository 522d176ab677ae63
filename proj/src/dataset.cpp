#include "asymada/dataset.hpp"

#include <cmath>
#include <string>

#include "asymada/errors.hpp"

namespace asymada {

Dataset Dataset::from_samples(std::vector<LabeledSample> samples) {
  return build(std::move(samples), true);
}

Dataset Dataset::from_samples_allow_single_class(std::vector<LabeledSample> samples) {
  return build(std::move(samples), false);
}

Dataset Dataset::build(std::vector<LabeledSample> samples, bool require_both_classes) {
  if (samples.empty()) throw DataError("dataset is empty");
  const std::size_t dim = samples.front().features.size();
  if (dim == 0) throw DataError("samples have no features");

  Dataset out;
  out.dim_ = dim;
  out.samples_.reserve(samples.size());
  out.source_rows_.reserve(samples.size());

  for (std::size_t row = 0; row < samples.size(); ++row) {
    const auto& s = samples[row];
    if (s.features.size() != dim) {
      throw DataError("row " + std::to_string(row) + ": expected " + std::to_string(dim) +
                      " features, got " + std::to_string(s.features.size()));
    }
    if (s.label != 1 && s.label != -1) {
      throw DataError("row " + std::to_string(row) + ": label must be +1 or -1");
    }
    for (double v : s.features) {
      if (!std::isfinite(v)) throw DataError("row " + std::to_string(row) + ": non-finite feature");
    }
  }

  for (int pass = 0; pass < 2; ++pass) {
    const Label wanted = pass == 0 ? 1 : -1;
    for (std::size_t row = 0; row < samples.size(); ++row) {
      if (samples[row].label != wanted) continue;
      out.samples_.push_back(std::move(samples[row]));
      out.source_rows_.push_back(row);
    }
    if (pass == 0) out.m_ = out.samples_.size();
  }

  if (require_both_classes && (out.m_ == 0 || out.m_ == out.samples_.size())) {
    throw DataError("dataset must contain both positive and negative samples (m=" +
                    std::to_string(out.m_) + ", n=" + std::to_string(out.samples_.size()) + ")");
  }
  return out;
}

std::vector<LabeledSample> Dataset::to_source_order() const {
  std::vector<LabeledSample> out(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) out[source_rows_[i]] = samples_[i];
  return out;
}

Dataset Dataset::without(std::size_t i) const {
  Dataset out;
  out.dim_ = dim_;
  out.m_ = i < m_ ? m_ - 1 : m_;
  out.samples_.reserve(samples_.size() - 1);
  out.source_rows_.reserve(samples_.size() - 1);
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (k == i) continue;
    out.samples_.push_back(samples_[k]);
    out.source_rows_.push_back(k);
  }
  return out;
}

}  // namespace asymada
