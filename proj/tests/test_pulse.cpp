#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "qdsim/pulse.hpp"

using namespace qdsim;

TEST_CASE("square train: central-half placement and amplitude bounds") {
  PulseConfig cfg = PulseConfig::with_steps(1.0, 1024, 1);
  RandomStream rng(1, 0, stream::kPulseBase);
  const auto train = random_square(cfg, rng);
  REQUIRE(train.amplitudes.size() == 1);
  CHECK(train.window_starts[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(train.window_widths[0] == doctest::Approx(0.5).epsilon(1e-15));

  PulseConfig cfg5 = PulseConfig::with_steps(1.0, 1024, 5);
  for (uint64_t seed : {1ull, 2ull, 99ull}) {
    RandomStream r(seed, 0, stream::kPulseBase);
    const auto t = random_square(cfg5, r);
    for (double a : t.amplitudes) {
      CHECK(a >= -100.0);
      CHECK(a <= 100.0);
    }
    // windows inside [0, T] and non-overlapping
    for (size_t k = 0; k < t.amplitudes.size(); ++k) {
      CHECK(t.window_starts[k] >= 0.0);
      CHECK(t.window_starts[k] + t.window_widths[k] <= 1.0 + 1e-15);
      if (k > 0) {
        CHECK(t.window_starts[k] >=
              t.window_starts[k - 1] + t.window_widths[k - 1]);
      }
    }
  }
}

TEST_CASE("pulse trains are seed-deterministic") {
  const PulseConfig cfg;
  RandomStream a(77, 4, stream::kPulseBase), b(77, 4, stream::kPulseBase);
  const auto ta = random_square(cfg, a);
  const auto tb = random_square(cfg, b);
  CHECK(ta.amplitudes == tb.amplitudes);
  CHECK(ta.window_starts == tb.window_starts);

  RandomStream c(77, 4, stream::kPulseBase), d(77, 4, stream::kPulseBase);
  const auto tc = random_gaussian(cfg, c);
  const auto td = random_gaussian(cfg, d);
  CHECK(tc.amplitudes == td.amplitudes);
  CHECK(tc.means == td.means);
}

TEST_CASE("gaussian train: jittered bin centers, shared sigma") {
  PulseConfig cfg = PulseConfig::with_steps(2.0, 1024, 5);
  CHECK(cfg.gaussian_sigma == doctest::Approx(2.0 / (12.0 * 1024.0)));

  for (uint64_t seed : {3ull, 8ull, 21ull}) {
    RandomStream rng(seed, 0, stream::kPulseBase);
    const auto train = random_gaussian(cfg, rng);
    REQUIRE(train.means.size() == 5);
    CHECK(train.sigma == cfg.gaussian_sigma);
    const double bin = cfg.total_time / 5.0;
    for (int k = 0; k < 5; ++k) {
      const double center = (k + 0.5) * bin;  // 0.1, 0.3, ... in units of T
      CHECK(std::abs(train.means[k] - center) <= 0.25 * bin);
      if (k > 0) CHECK(train.means[k] > train.means[k - 1]);
    }
    for (double a : train.amplitudes) {
      CHECK(a >= cfg.amp_min);
      CHECK(a <= cfg.amp_max);
    }
  }
}

TEST_CASE("gaussian sampling: peak value and zero train") {
  PulseConfig cfg = PulseConfig::with_steps(1.0, 1024, 1);
  cfg.gaussian_sigma = 1.0 / 64.0;

  GaussianTrain train;
  train.sigma = cfg.gaussian_sigma;
  train.amplitudes = {1.0};
  train.means = {0.5};
  const auto w = sample(train, cfg);

  // Nearest midpoint is at most half a sample away from the mean.
  const double delta = cfg.dt();
  size_t nearest = 0;
  double best = 1e9;
  for (int j = 0; j < cfg.num_steps; ++j) {
    const double t = (0.5 + j) * delta;
    if (std::abs(t - 0.5) < best) {
      best = std::abs(t - 0.5);
      nearest = j;
    }
  }
  const double bound =
      1.0 - std::exp(-(delta / 2) * (delta / 2) /
                     (2.0 * cfg.gaussian_sigma * cfg.gaussian_sigma));
  CHECK(std::abs(w.samples[nearest] - 1.0) <= bound + 1e-12);

  // A mean placed exactly on a midpoint samples to the amplitude.
  train.means = {(0.5 + 511) * delta};
  const auto w2 = sample(train, cfg);
  CHECK(w2.samples[511] == doctest::Approx(1.0).epsilon(1e-12));

  train.amplitudes = {0.0};
  const auto zero = sample(train, cfg);
  CHECK(*std::max_element(zero.samples.begin(), zero.samples.end()) == 0.0);
}

TEST_CASE("square sampling: Riemann sum bookkeeping") {
  PulseConfig cfg = PulseConfig::with_steps(1.0, 1024, 1);
  RandomStream rng(5, 0, stream::kPulseBase);
  const auto train = random_square(cfg, rng);
  const auto w = sample(train, cfg);

  double integral = 0.0;
  for (double s : w.samples) integral += s * cfg.dt();
  const double exact = train.amplitudes[0] * train.window_widths[0];
  CHECK(std::abs(integral - exact) <= cfg.dt() * std::abs(train.amplitudes[0]));
}

TEST_CASE("waveform magnitude bound and permutation symmetry") {
  PulseConfig cfg = PulseConfig::with_steps(1.0, 256, 3);
  cfg.gaussian_sigma = 0.05;

  GaussianTrain train;
  train.sigma = cfg.gaussian_sigma;
  train.amplitudes = {30.0, -70.0, 55.0};
  train.means = {0.2, 0.5, 0.8};
  const auto w = sample(train, cfg);
  const double max_amp = 70.0;
  for (double s : w.samples) CHECK(std::abs(s) <= 3 * max_amp);

  GaussianTrain permuted;
  permuted.sigma = train.sigma;
  permuted.amplitudes = {55.0, 30.0, -70.0};
  permuted.means = {0.8, 0.2, 0.5};
  const auto wp = sample(permuted, cfg);
  for (int j = 0; j < cfg.num_steps; ++j) {
    CHECK(std::abs(w.samples[j] - wp.samples[j]) < 1e-12);
  }
}

TEST_CASE("pulse config validation") {
  PulseConfig bad;
  bad.num_steps = 1000;  // not a power of two
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = PulseConfig{};
  bad.amp_min = 5.0;
  bad.amp_max = -5.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = PulseConfig{};
  bad.num_pulses = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
