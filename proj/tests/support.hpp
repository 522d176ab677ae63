// Test-only generators and independent reference implementations.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "asymada/boost.hpp"
#include "asymada/dataset.hpp"
#include "asymada/stump.hpp"

namespace asymada::testing {

// Random dataset with n samples and d features. Half of the features take a
// few integer values so that ties and duplicate values are common.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::uniform_real_distribution<double> cont(-3.0, 3.0);
  std::uniform_int_distribution<int> disc(0, 4);
  std::bernoulli_distribution coin(0.5);
  std::vector<LabeledSample> s(n);
  for (auto& x : s) {
    for (std::size_t f = 0; f < d; ++f) x.features.push_back(f % 2 == 0 ? cont(rng) : disc(rng));
    x.label = coin(rng) ? 1 : -1;
  }
  // Guarantee both classes.
  s[0].label = 1;
  s[n - 1].label = -1;
  return Dataset::from_samples(std::move(s));
}

// Random positive weights summing to 1.
inline std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  for (auto& x : w) x /= total;
  return w;
}

// Weights k_i / 1024 with integer k_i summing to 1024: every partial sum is exact.
inline std::vector<double> dyadic_distribution(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> k(n, 1);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int left = 1024 - static_cast<int>(n); left > 0; --left) ++k[pick(rng)];
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = k[i] / 1024.0;
  return w;
}

struct BruteStump {
  Stump stump;
  double eps = std::numeric_limits<double>::infinity();
};

// Evaluates every candidate stump with a direct sum; candidate thresholds are
// one below the minimum and every midpoint between distinct sorted values.
inline BruteStump brute_force_stump(const Dataset& data, const std::vector<double>& w) {
  BruteStump best;
  for (std::size_t f = 0; f < data.dim(); ++f) {
    std::vector<double> v;
    for (std::size_t i = 0; i < data.size(); ++i) v.push_back(data[i].features[f]);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<double> cand{v.front() - 1.0};
    for (std::size_t j = 1; j < v.size(); ++j) cand.push_back((v[j - 1] + v[j]) / 2.0);
    for (double t : cand) {
      for (int pol : {1, -1}) {
        double err = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
          const int pred = data[i].features[f] > t ? pol : -pol;
          if (pred != data.label(i)) err += w[i];
        }
        if (err < best.eps) best = {Stump{f, t, pol}, err};
      }
    }
  }
  return best;
}

struct ClassicRun {
  std::vector<Stump> stumps;
  std::vector<double> alphas;
};

// Textbook discrete AdaBoost with D_1(i) = 1/n.
inline ClassicRun classic_adaboost(const Dataset& data, int rounds) {
  const std::size_t n = data.size();
  const StumpLearner learner(data);
  std::vector<double> D(n, 1.0 / static_cast<double>(n));
  ClassicRun run;
  for (int t = 0; t < rounds; ++t) {
    const auto fit = learner.fit(D);
    if (!fit) break;
    double eps = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (fit->stump.predict(data.features(i)) != data.label(i)) eps += D[i];
    }
    const double e = std::clamp(eps, 1e-10, 1.0 - 1e-10);
    const double alpha = 0.5 * std::log((1.0 - e) / e);
    double z = 0.0;
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = D[i] * std::exp(-alpha * data.label(i) * fit->stump.predict(data.features(i)));
      z += next[i];
    }
    for (auto& x : next) x /= z;
    D = std::move(next);
    run.stumps.push_back(fit->stump);
    run.alphas.push_back(alpha);
  }
  return run;
}

// sum_i D_1(i) exp(-y_i f_t(x_i)) for the first t rounds of the classifier,
// the exponential loss that the product of normalizers equals.
inline double replayed_exponential_loss(const Dataset& data, const WeightInit& init,
                                        const StrongClassifier& c, std::size_t t) {
  const std::size_t m = data.num_positives();
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double f = 0.0;
    for (std::size_t k = 0; k < t; ++k) f += c.rounds()[k].alpha * c.rounds()[k].stump.predict(data.features(i));
    const double d1 = i < m ? init.gamma * init.d1_pos[i] : (1.0 - init.gamma) * init.d1_neg[i - m];
    total += d1 * std::exp(-data.label(i) * f);
  }
  return total;
}

inline Dataset line_dataset(const std::vector<std::pair<double, int>>& points) {
  std::vector<LabeledSample> s;
  for (auto [x, y] : points) s.push_back({{x}, y});
  return Dataset::from_samples(std::move(s));
}

}  // namespace asymada::testing
