#include "asymada/cloud.hpp"

#include <random>
#include <string>

#include "asymada/errors.hpp"

namespace asymada {
namespace {

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [-1, 1).
  double symmetric() { return 2.0 * static_cast<double>(engine_() >> 11) * 0x1.0p-53 - 1.0; }

 private:
  std::mt19937_64 engine_;
};

// Uniform in the annulus lo <= |p| < hi (lo = 0 gives a disc).
LabeledSample draw_ring(UniformStream& rng, double lo, double hi, Label label) {
  const double lo2 = lo * lo;
  const double hi2 = hi * hi;
  for (;;) {
    const double x = hi * rng.symmetric();
    const double y = hi * rng.symmetric();
    const double r2 = x * x + y * y;
    if (r2 >= lo2 && r2 < hi2) return LabeledSample{{x, y}, label};
  }
}

}  // namespace

double CloudSpec::positive_radius() const {
  return inner_radius + overlap_fraction * (outer_radius - inner_radius);
}

double CloudSpec::negative_inner_radius() const { return (1.0 - overlap_fraction) * (inner_radius + gap); }

void CloudSpec::validate() const {
  if (n_pos < 1 || n_neg < 1) throw UsageError("cloud needs at least one sample per class");
  if (!(inner_radius > 0.0)) throw UsageError("inner radius must be positive");
  if (!(gap >= 0.0)) throw UsageError("gap must be non-negative");
  if (!(inner_radius + gap < outer_radius)) {
    throw UsageError("outer radius must exceed inner radius plus gap");
  }
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
    throw UsageError("overlap fraction must lie in [0,1)");
  }
}

CloudSpec CloudSpec::separable_default() {
  CloudSpec s;
  s.gap = 0.3;
  s.overlap_fraction = 0.0;
  return s;
}

CloudSpec CloudSpec::overlapping_default() {
  CloudSpec s;
  s.gap = 0.0;
  s.overlap_fraction = 0.4;
  return s;
}

Dataset gen_cloud(const CloudSpec& spec) {
  spec.validate();
  UniformStream rng(spec.seed);
  std::vector<LabeledSample> samples;
  samples.reserve(spec.n_pos + spec.n_neg);
  for (std::size_t i = 0; i < spec.n_pos; ++i) samples.push_back(draw_ring(rng, 0.0, spec.positive_radius(), 1));
  for (std::size_t i = 0; i < spec.n_neg; ++i) {
    samples.push_back(draw_ring(rng, spec.negative_inner_radius(), spec.outer_radius, -1));
  }
  return Dataset::from_samples(std::move(samples));
}

}  // namespace asymada
