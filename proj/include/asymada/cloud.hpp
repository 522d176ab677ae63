#pragma once

#include <cstdint>
#include <string>

#include "asymada/dataset.hpp"

namespace asymada {

// Two-class planar cloud: positives uniform in a disc, negatives uniform in
// an annulus around it.
//
// Geometry, with r_in = inner_radius, r_out = outer_radius, f = overlap_fraction:
//   positive disc radius      r_in + f (r_out - r_in)
//   negative annulus          [(1 - f)(r_in + gap), r_out]
// With f = 0 the classes are separated by the ring [r_in, r_in + gap].
struct CloudSpec {
  std::size_t n_pos = 250;
  std::size_t n_neg = 250;
  double inner_radius = 1.0;
  double outer_radius = 2.0;
  double gap = 0.0;
  double overlap_fraction = 0.0;
  std::uint64_t seed = 42;

  double positive_radius() const;
  double negative_inner_radius() const;
  bool separable() const { return positive_radius() <= negative_inner_radius(); }

  // Throws UsageError on empty classes, non-positive radii, r_in + gap >= r_out,
  // negative gap or overlap outside [0,1).
  void validate() const;

  // Separable set used for the zero-training-error experiments.
  static CloudSpec separable_default();
  // Overlapping set calibrated so leave-one-out error at gamma = 1/2 is near 30%.
  static CloudSpec overlapping_default();
};

// Identifier of the pseudo-random stream: std::mt19937_64 seeded with the
// spec seed, 53 high bits per uniform draw, rejection sampling from the
// bounding square. Only IEEE-exact operations touch the samples.
inline constexpr const char* kCloudRngId = "mt19937_64/u53/square-rejection";

Dataset gen_cloud(const CloudSpec& spec);

}  // namespace asymada
