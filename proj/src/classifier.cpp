#include "asymada/classifier.hpp"

#include <algorithm>
#include <string>

#include "asymada/errors.hpp"

namespace asymada {

double StrongClassifier::score(std::span<const double> x) const {
  if (dim_ != 0 && x.size() != dim_) {
    throw UsageError("feature vector has " + std::to_string(x.size()) + " components, classifier expects " +
                     std::to_string(dim_));
  }
  double s = 0.0;
  for (const auto& r : rounds_) {
    if (r.stump.feature >= x.size()) throw UsageError("stump feature index out of range");
    s += r.alpha * r.stump.predict(x);
  }
  return s;
}

StrongClassifier StrongClassifier::truncated(std::size_t t) const {
  StrongClassifier out(dim_, gamma_used_);
  const std::size_t keep = std::min(t, rounds_.size());
  out.rounds_.assign(rounds_.begin(), rounds_.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

}  // namespace asymada
