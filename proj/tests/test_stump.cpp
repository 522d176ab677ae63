#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "asymada/stump.hpp"
#include "support.hpp"

using namespace asymada;
using asymada::testing::line_dataset;

TEST_CASE("enumerate_thresholds") {
  CHECK(enumerate_thresholds(std::vector<double>{1, 2, 3}) == std::vector<double>{0, 1.5, 2.5});
  CHECK(enumerate_thresholds(std::vector<double>{5, 5, 5}) == std::vector<double>{4});
  CHECK(enumerate_thresholds(std::vector<double>{2, 1}) == std::vector<double>{0, 1.5});
  CHECK(enumerate_thresholds(std::vector<double>{}).empty());
}

TEST_CASE("enumerate_thresholds separates adjacent doubles") {
  const double a = 1.0;
  const double b = std::nextafter(1.0, 2.0);
  const auto t = enumerate_thresholds(std::vector<double>{a, b});
  REQUIRE(t.size() == 2);
  CHECK(a <= t[1]);
  CHECK(t[1] < b);
}

TEST_CASE("separable 1D set gives zero error") {
  const auto data = line_dataset({{1, 1}, {2, 1}, {3, -1}, {4, -1}});
  const std::vector<double> w(4, 0.25);
  const auto fit = train_stump(data, w);
  REQUIRE(fit);
  CHECK(fit->stump.feature == 0);
  CHECK(fit->stump.threshold == 2.5);
  CHECK(fit->stump.polarity == -1);
  CHECK(fit->eps == 0.0);
}

TEST_CASE("interleaved 1D set: eps 1/4, lowest threshold wins the tie") {
  // Exhaustive enumeration over thresholds {0, 1.5, 2.5, 3.5} x polarities gives
  // errors {1/2,1/2}, {3/4,1/4}, {1/2,1/2}, {3/4,1/4}.
  const auto data = line_dataset({{1, 1}, {3, 1}, {2, -1}, {4, -1}});
  const std::vector<double> w(4, 0.25);
  const auto fit = train_stump(data, w);
  REQUIRE(fit);
  CHECK(fit->eps == 0.25);
  CHECK(fit->stump == Stump{0, 1.5, -1});
  CHECK(testing::brute_force_stump(data, w).eps == 0.25);
}

TEST_CASE("weighted 1D set protects the heavy positive") {
  const auto data = line_dataset({{1, 1}, {3, 1}, {2, -1}, {4, -1}});
  const std::vector<double> w{0.7, 0.1, 0.1, 0.1};
  const auto fit = train_stump(data, w);
  REQUIRE(fit);
  CHECK(fit->eps == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(fit->stump.predict(std::vector<double>{1.0}) == 1);
  CHECK(testing::brute_force_stump(data, w).eps == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("tie order: lower feature, then lower threshold, then polarity +1") {
  SUBCASE("duplicated feature") {
    std::vector<LabeledSample> s{{{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, -1}, {{4, 4}, -1}};
    const auto data = Dataset::from_samples(s);
    const auto fit = train_stump(data, std::vector<double>(4, 0.25));
    REQUIRE(fit);
    CHECK(fit->stump.feature == 0);
  }
  SUBCASE("polarity +1 on a full tie") {
    // Every stump has error 1/2 at threshold below the minimum.
    const auto data = line_dataset({{1, 1}, {1, -1}, {2, 1}, {2, -1}});
    const auto fit = train_stump(data, std::vector<double>(4, 0.25));
    REQUIRE(fit);
    CHECK(fit->stump == Stump{0, 0.0, 1});
    CHECK(fit->eps == 0.5);
  }
}

TEST_CASE("constant features are degenerate") {
  std::vector<LabeledSample> s{{{1, 7}, 1}, {{1, 7}, -1}, {{1, 7}, -1}};
  const auto data = Dataset::from_samples(s);
  CHECK_FALSE(train_stump(data, std::vector<double>(3, 1.0 / 3)).has_value());
}

TEST_CASE("weight length mismatch is rejected") {
  const auto data = line_dataset({{1, 1}, {2, -1}});
  CHECK_THROWS(train_stump(data, std::vector<double>(3, 1.0 / 3)));
}

TEST_CASE("stump search matches brute force exactly on dyadic weights") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto data = testing::random_dataset(rng, n, d);
    const auto w = testing::dyadic_distribution(rng, n);
    const auto brute = testing::brute_force_stump(data, w);
    const auto fit = train_stump(data, w);
    if (!fit) continue;  // all features constant
    CHECK(fit->eps == brute.eps);
    INFO(fit->stump.feature, " ", fit->stump.threshold, " ", fit->stump.polarity, " vs ", brute.stump.feature, " ",
         brute.stump.threshold, " ", brute.stump.polarity);
    CHECK(fit->stump == brute.stump);
  }
}

TEST_CASE("stump search matches brute force on real-valued weights") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto data = testing::random_dataset(rng, n, d);
    const auto w = testing::random_distribution(rng, n);
    const auto fit = train_stump(data, w);
    if (!fit) continue;
    CHECK(fit->eps == doctest::Approx(testing::brute_force_stump(data, w).eps).epsilon(1e-12));
    CHECK(fit->eps <= 0.5 + 1e-15);
  }
}

TEST_CASE("selection is invariant to rescaling the weights") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto data = testing::random_dataset(rng, 30, 3);
    const auto w = testing::random_distribution(rng, 30);
    const auto base = train_stump(data, w);
    REQUIRE(base);
    for (double c : {3.0, 0.37, 1e3}) {
      std::vector<double> scaled(w);
      for (auto& x : scaled) x *= c;
      const auto fit = train_stump(data, scaled);
      REQUIRE(fit);
      CHECK(fit->stump == base->stump);
    }
  }
}

TEST_CASE("minimal error is invariant to permuting samples with their weights") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto data = testing::random_dataset(rng, 20, 2);
    const auto w = testing::dyadic_distribution(rng, 20);

    std::vector<std::size_t> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LabeledSample> s;
    std::vector<double> w2;
    for (auto p : perm) {
      s.push_back(data[p]);
      w2.push_back(w[p]);
    }
    // Canonicalization reorders positives first; carry the weights along.
    const auto shuffled = Dataset::from_samples(s);
    std::vector<double> w3(20);
    for (std::size_t i = 0; i < 20; ++i) w3[i] = w2[shuffled.source_rows()[i]];

    const auto a = train_stump(data, w);
    const auto b = train_stump(shuffled, w3);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->eps == b->eps);
    CHECK(a->stump == b->stump);
  }
}

TEST_CASE("learner is deterministic and reusable") {
  std::mt19937_64 rng(11);
  const auto data = testing::random_dataset(rng, 40, 4);
  const StumpLearner learner(data);
  const auto w = testing::random_distribution(rng, 40);
  const auto a = learner.fit(w);
  const auto b = learner.fit(w);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->stump == b->stump);
  CHECK(a->eps == b->eps);
}
