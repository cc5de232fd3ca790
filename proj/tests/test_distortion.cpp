#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qdsim/distortion.hpp"
#include "qdsim/validation.hpp"

using namespace qdsim;

namespace {
constexpr double kPi = std::numbers::pi;

double chebyshev_t(int n, double x) {
  // |x| >= 1 branch via cosh, |x| < 1 via cos.
  if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
  return std::cosh(n * std::acosh(std::abs(x)));
}
}  // namespace

TEST_CASE("chebyshev design: order 1 closed form") {
  AnalogFilterSpec spec;
  spec.order = 1;
  spec.passband_ripple_db = 1.0;
  spec.cutoff_rad_per_s = 10.0;
  const auto tf = design_chebyshev1(spec);
  REQUIRE(tf.poles.size() == 1);
  CHECK(tf.poles[0].imag() == doctest::Approx(0.0).epsilon(1e-12));
  const double eps = spec.ripple_epsilon();
  CHECK(tf.poles[0].real() == doctest::Approx(-10.0 / eps).epsilon(1e-12));
  CHECK(tf.magnitude(0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chebyshev design: cutoff magnitude and DC parity") {
  for (int order : {1, 2, 3, 4, 5, 6}) {
    AnalogFilterSpec spec;
    spec.order = order;
    spec.passband_ripple_db = 0.5;
    spec.cutoff_rad_per_s = 2.0 * kPi * 20.0;
    const auto tf = design_chebyshev1(spec);
    const double eps = spec.ripple_epsilon();
    const double edge = 1.0 / std::sqrt(1.0 + eps * eps);
    CHECK(tf.magnitude(spec.cutoff_rad_per_s) == doctest::Approx(edge).epsilon(1e-10));
    const double dc = order % 2 == 0 ? edge : 1.0;
    CHECK(tf.magnitude(0.0) == doctest::Approx(dc).epsilon(1e-10));
  }
}

TEST_CASE("chebyshev design rejects invalid specs") {
  AnalogFilterSpec spec;
  spec.order = 0;
  CHECK_THROWS_AS(design_chebyshev1(spec), std::invalid_argument);
  spec = AnalogFilterSpec{};
  spec.passband_ripple_db = 0.0;
  CHECK_THROWS_AS(design_chebyshev1(spec), std::invalid_argument);
}

TEST_CASE("discretize: unit gain, pre-warp identity, DC parity") {
  AnalogTransferFunction unit;
  unit.gain = 1.0;
  const auto id = discretize(unit, 1.0, 100.0);
  CHECK(id.b == std::vector<double>{1.0});
  CHECK(id.a == std::vector<double>{1.0});

  for (int order : {2, 3, 4, 5}) {
    AnalogFilterSpec spec;
    spec.order = order;
    spec.passband_ripple_db = 0.5;
    spec.cutoff_rad_per_s = 2.0 * kPi * 20.0;
    const double fs = 1024.0;
    const auto analog = design_chebyshev1(spec);
    const auto f = discretize(analog, spec.cutoff_rad_per_s, fs);

    // Discrete response at the cutoff equals the analog response there.
    const double fc_hz = spec.cutoff_rad_per_s / (2.0 * kPi);
    CHECK(std::abs(f.transfer(fc_hz)) ==
          doctest::Approx(analog.magnitude(spec.cutoff_rad_per_s)).epsilon(1e-9));

    // Bilinear maps z = 1 to s = 0, so DC gain obeys the parity rule.
    const double eps = spec.ripple_epsilon();
    const double expected_dc =
        order % 2 == 0 ? 1.0 / std::sqrt(1.0 + eps * eps) : 1.0;
    CHECK(std::abs(f.transfer(0.0)) == doctest::Approx(expected_dc).epsilon(1e-9));
  }
}

TEST_CASE("discretize rejects too-low sample rates") {
  AnalogFilterSpec spec;
  const auto analog = design_chebyshev1(spec);
  CHECK_THROWS(discretize(analog, spec.cutoff_rad_per_s, 30.0));
}

TEST_CASE("apply: identity filter passes input through") {
  const auto id = DiscreteFilter::identity(1024.0);
  std::vector<double> x = {1.0, -2.0, 3.5, 0.0, 7.25};
  CHECK(qdsim::apply(id, x) == x);
}

TEST_CASE("apply: stopband tone attenuated at least as the analog bound") {
  AnalogFilterSpec spec;  // defaults: order 4, 0.5 dB, 2 pi 20
  const double fs = 1024.0;
  const auto filter = make_distortion_filter(spec, fs);

  const double f_tone = 10.0 * spec.cutoff_rad_per_s / (2.0 * kPi);  // 200 Hz
  const int n = 4096;
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = std::sin(2.0 * kPi * f_tone * j / fs);
  const auto y = qdsim::apply(filter, x);

  double in_rms = 0.0, out_rms = 0.0;
  for (int j = n / 2; j < n; ++j) {  // skip the start-up transient
    in_rms += x[j] * x[j];
    out_rms += y[j] * y[j];
  }
  const double ratio = std::sqrt(out_rms / in_rms);
  const double eps = spec.ripple_epsilon();
  const double bound =
      1.0 / std::sqrt(1.0 + eps * eps * std::pow(chebyshev_t(4, 10.0), 2));
  CHECK(ratio <= bound * 1.05);
}

TEST_CASE("response: identity filter and passband ripple extrema count") {
  const auto id = DiscreteFilter::identity(1024.0);
  const auto r = response(id, {0.0, 1.0, 10.0, 100.0});
  for (double m : r.magnitude) CHECK(m == doctest::Approx(1.0));
  for (double p : r.phase) CHECK(p == doctest::Approx(0.0));

  for (int order : {1, 3, 4, 5}) {
    AnalogFilterSpec spec;
    spec.order = order;
    spec.passband_ripple_db = 0.5;
    spec.cutoff_rad_per_s = 2.0 * kPi * 20.0;
    const auto f = make_distortion_filter(spec, 1024.0);

    const int grid = 4000;
    std::vector<double> freqs(grid);
    for (int i = 0; i < grid; ++i) freqs[i] = 20.0 * i / (grid - 1);
    const auto resp = response(f, freqs);

    int maxima = 0;
    for (int i = 1; i + 1 < grid; ++i) {
      if (resp.magnitude[i] > resp.magnitude[i - 1] &&
          resp.magnitude[i] >= resp.magnitude[i + 1]) {
        ++maxima;
      }
    }
    if (resp.magnitude[0] > resp.magnitude[1]) ++maxima;  // DC endpoint (odd orders)
    CHECK(maxima == (order + 1) / 2);
  }
}

TEST_CASE("filter linearity and time invariance") {
  const auto filter = make_distortion_filter(AnalogFilterSpec{}, 1024.0);
  const auto report = verify_filter_properties(filter, 1024);
  CHECK(report.passed);
  CHECK(report.linearity_residual <= 1e-10);
  CHECK(report.details["time_invariance_residual"].get<double>() <= 1e-10);
}

TEST_CASE("default filter delays and shrinks a gaussian train") {
  PulseConfig cfg = PulseConfig::with_steps(1.0, 1024, 5);
  cfg.gaussian_sigma = 1.0 / 64.0;
  RandomStream rng(12, 0, stream::kPulseBase);
  const auto w = sample(random_gaussian(cfg, rng), cfg);
  const auto filter = make_distortion_filter(AnalogFilterSpec{}, 1024.0);
  const auto d = qdsim::apply(filter, w);

  const auto report = verify_distortion({w}, {d});
  CHECK(report.passed);
  CHECK(report.correlation_lag > 0.0);
  CHECK(report.peak_ratio < 1.0);
}
