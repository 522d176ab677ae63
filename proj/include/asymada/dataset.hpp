#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace asymada {

using Label = int;  // +1 or -1

struct LabeledSample {
  std::vector<double> features;
  Label label = -1;
};

// A binary classification dataset stored positives-first: samples[0..m) carry
// label +1 and samples[m..n) carry label -1. source_rows[i] is the row index
// the i-th canonical sample had in the input it was built from.
class Dataset {
 public:
  Dataset() = default;

  // Validates and canonicalizes (stable partition, positives first).
  // Throws DataError on ragged or non-finite features, labels outside
  // {+1,-1}, or a missing class.
  static Dataset from_samples(std::vector<LabeledSample> samples);

  // Same as from_samples but allows one class to be empty.
  static Dataset from_samples_allow_single_class(std::vector<LabeledSample> samples);

  std::size_t size() const { return samples_.size(); }
  std::size_t num_positives() const { return m_; }
  std::size_t num_negatives() const { return samples_.size() - m_; }
  std::size_t dim() const { return dim_; }

  const LabeledSample& operator[](std::size_t i) const { return samples_[i]; }
  const std::vector<LabeledSample>& samples() const { return samples_; }
  std::span<const double> features(std::size_t i) const { return samples_[i].features; }
  Label label(std::size_t i) const { return samples_[i].label; }
  bool is_positive(std::size_t i) const { return i < m_; }

  const std::vector<std::size_t>& source_rows() const { return source_rows_; }

  // Samples in their original input order.
  std::vector<LabeledSample> to_source_order() const;

  // The dataset with canonical sample `i` removed (leave-one-out fold).
  // The source-row map of the result refers to this dataset's canonical order.
  Dataset without(std::size_t i) const;

 private:
  static Dataset build(std::vector<LabeledSample> samples, bool require_both_classes);

  std::vector<LabeledSample> samples_;
  std::vector<std::size_t> source_rows_;
  std::size_t m_ = 0;
  std::size_t dim_ = 0;
};

}  // namespace asymada
