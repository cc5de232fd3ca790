#include "qdsim/pulse.hpp"

#include <cmath>
#include <stdexcept>

#include "qdsim/fft.hpp"

namespace qdsim {

PulseConfig PulseConfig::with_steps(double T, int M, int n) {
  PulseConfig cfg;
  cfg.total_time = T;
  cfg.num_steps = M;
  cfg.num_pulses = n;
  cfg.gaussian_sigma = T / (12.0 * M);
  return cfg;
}

void PulseConfig::validate() const {
  if (total_time <= 0.0) throw std::invalid_argument("PulseConfig: T must be > 0");
  if (num_steps < 2 || !is_power_of_two(static_cast<size_t>(num_steps))) {
    throw std::invalid_argument("PulseConfig: M must be a power of two >= 2");
  }
  if (num_pulses < 1) throw std::invalid_argument("PulseConfig: n must be >= 1");
  if (!(amp_min < amp_max)) {
    throw std::invalid_argument("PulseConfig: amp_min must be < amp_max");
  }
  if (gaussian_sigma <= 0.0) {
    throw std::invalid_argument("PulseConfig: sigma must be > 0");
  }
}

std::vector<double> PulseConfig::time_grid() const {
  std::vector<double> t(num_steps);
  const double d = dt();
  for (int j = 0; j < num_steps; ++j) t[j] = (0.5 + j) * d;
  return t;
}

SquareTrain random_square(const PulseConfig& cfg, RandomStream& rng) {
  cfg.validate();
  const int n = cfg.num_pulses;
  const double bin = cfg.total_time / n;
  SquareTrain train;
  train.amplitudes.reserve(n);
  train.window_starts.reserve(n);
  train.window_widths.reserve(n);
  for (int k = 0; k < n; ++k) {
    train.amplitudes.push_back(rng.uniform(cfg.amp_min, cfg.amp_max));
  }
  for (int k = 0; k < n; ++k) {
    train.window_starts.push_back((k + 0.25) * bin);
    train.window_widths.push_back(0.5 * bin);
  }
  return train;
}

GaussianTrain random_gaussian(const PulseConfig& cfg, RandomStream& rng) {
  cfg.validate();
  const int n = cfg.num_pulses;
  const double bin = cfg.total_time / n;
  GaussianTrain train;
  train.sigma = cfg.gaussian_sigma;
  train.amplitudes.reserve(n);
  train.means.reserve(n);
  for (int k = 0; k < n; ++k) {
    train.amplitudes.push_back(rng.uniform(cfg.amp_min, cfg.amp_max));
  }
  // Bin centers with jitter bounded by a quarter bin: gaps stay positive,
  // so neighbouring pulses overlap only in their tails.
  for (int k = 0; k < n; ++k) {
    const double jitter = rng.uniform(-0.25 * bin, 0.25 * bin);
    train.means.push_back((k + 0.5) * bin + jitter);
  }
  return train;
}

Waveform sample(const SquareTrain& train, const PulseConfig& cfg) {
  cfg.validate();
  Waveform w;
  w.samples.assign(cfg.num_steps, 0.0);
  const double d = cfg.dt();
  for (size_t k = 0; k < train.amplitudes.size(); ++k) {
    const double lo = train.window_starts[k];
    const double hi = lo + train.window_widths[k];
    for (int j = 0; j < cfg.num_steps; ++j) {
      const double t = (0.5 + j) * d;
      if (t >= lo && t < hi) w.samples[j] += train.amplitudes[k];
    }
  }
  return w;
}

Waveform sample(const GaussianTrain& train, const PulseConfig& cfg) {
  cfg.validate();
  Waveform w;
  w.samples.assign(cfg.num_steps, 0.0);
  const double d = cfg.dt();
  const double two_sigma_sq = 2.0 * train.sigma * train.sigma;
  for (int j = 0; j < cfg.num_steps; ++j) {
    const double t = (0.5 + j) * d;
    double v = 0.0;
    for (size_t k = 0; k < train.amplitudes.size(); ++k) {
      const double dt = t - train.means[k];
      v += train.amplitudes[k] * std::exp(-dt * dt / two_sigma_sq);
    }
    w.samples[j] = v;
  }
  return w;
}

}  // namespace qdsim
