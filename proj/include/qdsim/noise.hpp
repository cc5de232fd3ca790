#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qdsim/rng.hpp"

namespace qdsim {

enum class NoiseKind { N0 = 0, N1, N2, N3, N4, N5, N6 };

std::string noise_kind_name(NoiseKind k);
NoiseKind noise_kind_from_name(const std::string& s);

/// Which printed PSD family a noisy axis follows (the paper gives one
/// form for z-type axes and one for x-type axes).
enum class PsdShape { Z, X };

/// Nonnegative power spectral density, power per rad/s, evaluated at
/// omega >= 0.
struct PSDSpec {
  std::function<double(double)> evaluator;
  std::string name;

  double operator()(double omega) const;
};

/// The printed z-axis PSD: 1/(w+1) + 0.8 exp(-(w-20)^2/10) for
/// 0 < w <= 50, else 0.25 + 0.8 exp(-(w-20)^2/10). w = 0 by continuity.
double psd_z(double omega);
/// The printed x-axis PSD: 1/(w+1)^1.5 + 0.5 exp(-(w-15)^2/10) for
/// 0 < w <= 20, else 5/48 + 0.5 exp(-(w-15)^2/10).
double psd_x(double omega);

/// Same families with the Gaussian bump relocated (used by N5).
double psd_z_with_bump(double omega, double bump_omega);
double psd_x_with_bump(double omega, double bump_omega);

PSDSpec make_psd(PsdShape shape, double bump_omega);
PSDSpec make_psd_for(NoiseKind kind, PsdShape shape, double n5_bump_omega = 40.0);

/// One realization from a PSD: positive-frequency bins at w_j = 2 pi j / T
/// get magnitude (M/sqrt(T)) sqrt(S(w_j)) and an iid uniform phase; DC and
/// Nyquist are set real (phase 0); the negative half mirrors conjugate;
/// the real part of the normalized inverse FFT is returned.
std::vector<double> generate_from_psd(const PSDSpec& S, double T, int M,
                                      RandomStream& rng);

/// Stationary Gaussian colored noise: white normals circularly convolved
/// with a unit-energy Gaussian kernel of width T/32, rescaled to unit
/// sample variance.
std::vector<double> generate_n2(double T, int M, RandomStream& rng);

/// Non-stationary colored noise: an N2 realization multiplied by the
/// envelope 1 + sin(2 pi t / T) on the midpoint grid.
std::vector<double> generate_n3(double T, int M, RandomStream& rng);

/// Non-Gaussian non-stationary noise: elementwise square of an N3
/// realization, mean-centered per realization.
std::vector<double> generate_n4(double T, int M, RandomStream& rng);

/// Exact elementwise square of a paired source realization.
std::vector<double> derive_n6(const std::vector<double>& source);

/// Noise assignment for one Hamiltonian axis.
struct AxisNoise {
  NoiseKind kind = NoiseKind::N0;
  PsdShape psd_shape = PsdShape::Z;
  int n6_source_axis = -1;  // index into the axis list (N6 only)
  double n5_bump_omega = 40.0;
};

struct NoiseRealizationBatch {
  int num_realizations = 0;
  int num_steps = 0;
  std::vector<double> samples;  // realization-major, K * M values

  double at(int k, int j) const {
    return samples[static_cast<size_t>(k) * num_steps + j];
  }
};

/// One realization of one axis. N6 must be derived from its source
/// realization instead (this throws for N6).
std::vector<double> generate_realization(const AxisNoise& axis, double T, int M,
                                         RandomStream& rng);

/// K realizations per axis, streams keyed by (master seed, example,
/// noise-stream + axis, realization): results do not depend on
/// generation order. N6 axes square their paired axis realization by
/// realization.
std::vector<NoiseRealizationBatch> generate_batches(
    const std::vector<AxisNoise>& axes, int K, double T, int M,
    uint64_t master_seed, uint32_t example_index);

}  // namespace qdsim
