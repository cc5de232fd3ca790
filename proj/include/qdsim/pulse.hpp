#pragma once

#include <vector>

#include "qdsim/rng.hpp"

namespace qdsim {

/// Pulse-train parameters. Defaults follow the published dataset
/// parameters (T = 1, M = 1024, n = 5, amplitudes in [-100, 100],
/// sigma = T/(12 M)).
struct PulseConfig {
  double total_time = 1.0;
  int num_steps = 1024;  // must be a power of two (FFT downstream)
  int num_pulses = 5;
  double amp_min = -100.0;
  double amp_max = 100.0;
  double gaussian_sigma = 1.0 / (12.0 * 1024.0);

  static PulseConfig with_steps(double T, int M, int n = 5);
  void validate() const;
  double dt() const { return total_time / num_steps; }
  /// Midpoint time grid t_j = (0.5 + j) * T/M, shared by every module.
  std::vector<double> time_grid() const;
};

/// Train of non-overlapping square pulses: each of the n equal bins of
/// [0, T] holds one pulse over its central half.
struct SquareTrain {
  std::vector<double> amplitudes;
  std::vector<double> window_starts;
  std::vector<double> window_widths;
};

/// Train of Gaussian pulses with a shared width and jittered bin-center
/// means (strictly increasing by construction).
struct GaussianTrain {
  std::vector<double> amplitudes;
  std::vector<double> means;
  double sigma = 0.0;
};

struct Waveform {
  std::vector<double> samples;

  size_t size() const { return samples.size(); }
  double operator[](size_t i) const { return samples[i]; }
};

SquareTrain random_square(const PulseConfig& cfg, RandomStream& rng);
GaussianTrain random_gaussian(const PulseConfig& cfg, RandomStream& rng);

Waveform sample(const SquareTrain& train, const PulseConfig& cfg);
Waveform sample(const GaussianTrain& train, const PulseConfig& cfg);

}  // namespace qdsim
