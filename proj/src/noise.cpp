#include "qdsim/noise.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qdsim/fft.hpp"

namespace qdsim {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kIfftImagTol = 1e-12;
}  // namespace

std::string noise_kind_name(NoiseKind k) {
  return "N" + std::to_string(static_cast<int>(k));
}

NoiseKind noise_kind_from_name(const std::string& s) {
  if (s.size() == 2 && s[0] == 'N' && s[1] >= '0' && s[1] <= '6') {
    return static_cast<NoiseKind>(s[1] - '0');
  }
  throw std::invalid_argument("unknown noise profile '" + s + "'");
}

double PSDSpec::operator()(double omega) const {
  if (omega < 0.0) throw std::invalid_argument("PSD evaluated at negative omega");
  const double v = evaluator(omega);
  if (v < 0.0) {
    throw std::runtime_error("PSD '" + name + "' negative at omega=" +
                             std::to_string(omega));
  }
  return v;
}

double psd_z_with_bump(double omega, double bump_omega) {
  if (omega < 0.0) throw std::invalid_argument("psd_z: omega must be >= 0");
  const double d = omega - bump_omega;
  const double bump = 0.8 * std::exp(-d * d / 10.0);
  return (omega <= 50.0 ? 1.0 / (omega + 1.0) : 0.25) + bump;
}

double psd_x_with_bump(double omega, double bump_omega) {
  if (omega < 0.0) throw std::invalid_argument("psd_x: omega must be >= 0");
  const double d = omega - bump_omega;
  const double bump = 0.5 * std::exp(-d * d / 10.0);
  return (omega <= 20.0 ? std::pow(omega + 1.0, -1.5) : 5.0 / 48.0) + bump;
}

double psd_z(double omega) { return psd_z_with_bump(omega, 20.0); }
double psd_x(double omega) { return psd_x_with_bump(omega, 15.0); }

PSDSpec make_psd(PsdShape shape, double bump_omega) {
  if (shape == PsdShape::Z) {
    return PSDSpec{[bump_omega](double w) { return psd_z_with_bump(w, bump_omega); },
                   "S_Z(bump=" + std::to_string(bump_omega) + ")"};
  }
  return PSDSpec{[bump_omega](double w) { return psd_x_with_bump(w, bump_omega); },
                 "S_X(bump=" + std::to_string(bump_omega) + ")"};
}

PSDSpec make_psd_for(NoiseKind kind, PsdShape shape, double n5_bump_omega) {
  switch (kind) {
    case NoiseKind::N1:
      return make_psd(shape, shape == PsdShape::Z ? 20.0 : 15.0);
    case NoiseKind::N5:
      return make_psd(shape, n5_bump_omega);
    default:
      throw std::invalid_argument("make_psd_for: " + noise_kind_name(kind) +
                                  " is not PSD-specified");
  }
}

std::vector<double> generate_from_psd(const PSDSpec& S, double T, int M,
                                      RandomStream& rng) {
  if (M < 2 || !is_power_of_two(static_cast<size_t>(M))) {
    throw std::invalid_argument("generate_from_psd: M must be a power of two >= 2");
  }
  const int half = M / 2;
  const double amp_scale = M / std::sqrt(T);
  std::vector<std::complex<double>> spectrum(M, {0.0, 0.0});

  // DC and Nyquist carry their PSD magnitude with phase fixed to zero;
  // bins 1..half-1 get random phases and mirror conjugate, the only
  // layout whose inverse transform is real.
  spectrum[0] = amp_scale * std::sqrt(S(0.0));
  spectrum[half] = amp_scale * std::sqrt(S(2.0 * kPi * half / T));
  for (int j = 1; j < half; ++j) {
    const double mag = amp_scale * std::sqrt(S(2.0 * kPi * j / T));
    const double phase = 2.0 * kPi * rng.uniform();
    spectrum[j] = std::polar(mag, phase);
    spectrum[M - j] = std::conj(spectrum[j]);
  }

  fft_inplace(spectrum, true);
  std::vector<double> out(M);
  for (int j = 0; j < M; ++j) {
    if (std::abs(spectrum[j].imag()) > kIfftImagTol) {
      throw std::runtime_error("generate_from_psd: non-real inverse transform");
    }
    out[j] = spectrum[j].real();
  }
  return out;
}

std::vector<double> generate_n2(double T, int M, RandomStream& rng) {
  if (M < 2 || !is_power_of_two(static_cast<size_t>(M))) {
    throw std::invalid_argument("generate_n2: M must be a power of two >= 2");
  }
  const double dt = T / M;
  const double kernel_sigma = T / 32.0;

  std::vector<std::complex<double>> white(M), kernel(M);
  for (int j = 0; j < M; ++j) white[j] = rng.gaussian();

  double energy = 0.0;
  for (int j = 0; j < M; ++j) {
    const double d = std::min(j, M - j) * dt;  // circular distance to 0
    const double g = std::exp(-d * d / (2.0 * kernel_sigma * kernel_sigma));
    kernel[j] = g;
    energy += g * g;
  }
  const double norm = 1.0 / std::sqrt(energy);
  for (auto& g : kernel) g *= norm;

  fft_inplace(white, false);
  fft_inplace(kernel, false);
  for (int j = 0; j < M; ++j) white[j] *= kernel[j];
  fft_inplace(white, true);

  std::vector<double> out(M);
  double mean = 0.0;
  for (int j = 0; j < M; ++j) {
    out[j] = white[j].real();
    mean += out[j];
  }
  mean /= M;
  double var = 0.0;
  for (double v : out) var += (v - mean) * (v - mean);
  var /= M;
  if (var > 0.0) {
    const double inv_std = 1.0 / std::sqrt(var);
    for (auto& v : out) v *= inv_std;
  }
  return out;
}

std::vector<double> generate_n3(double T, int M, RandomStream& rng) {
  std::vector<double> out = generate_n2(T, M, rng);
  for (int j = 0; j < M; ++j) {
    const double t = (0.5 + j) * T / M;
    out[j] *= 1.0 + std::sin(2.0 * kPi * t / T);
  }
  return out;
}

std::vector<double> generate_n4(double T, int M, RandomStream& rng) {
  std::vector<double> out = generate_n3(T, M, rng);
  double mean = 0.0;
  for (auto& v : out) {
    v *= v;
    mean += v;
  }
  mean /= M;
  for (auto& v : out) v -= mean;
  return out;
}

std::vector<double> derive_n6(const std::vector<double>& source) {
  std::vector<double> out(source.size());
  for (size_t j = 0; j < source.size(); ++j) out[j] = source[j] * source[j];
  return out;
}

std::vector<double> generate_realization(const AxisNoise& axis, double T, int M,
                                         RandomStream& rng) {
  switch (axis.kind) {
    case NoiseKind::N0:
      return std::vector<double>(M, 0.0);
    case NoiseKind::N1:
    case NoiseKind::N5:
      return generate_from_psd(
          make_psd_for(axis.kind, axis.psd_shape, axis.n5_bump_omega), T, M, rng);
    case NoiseKind::N2:
      return generate_n2(T, M, rng);
    case NoiseKind::N3:
      return generate_n3(T, M, rng);
    case NoiseKind::N4:
      return generate_n4(T, M, rng);
    case NoiseKind::N6:
      throw std::invalid_argument(
          "N6 realizations are derived from their source axis");
  }
  throw std::invalid_argument("unknown noise kind");
}

static void validate_axes(const std::vector<AxisNoise>& axes) {
  for (size_t a = 0; a < axes.size(); ++a) {
    if (axes[a].kind != NoiseKind::N6) continue;
    const int src = axes[a].n6_source_axis;
    if (src < 0 || src >= static_cast<int>(axes.size()) ||
        src == static_cast<int>(a)) {
      throw std::invalid_argument("N6 axis has no valid source axis");
    }
    if (axes[src].kind == NoiseKind::N6 || axes[src].kind == NoiseKind::N0) {
      throw std::invalid_argument("N6 cannot pair with N6 or N0");
    }
  }
}

std::vector<NoiseRealizationBatch> generate_batches(
    const std::vector<AxisNoise>& axes, int K, double T, int M,
    uint64_t master_seed, uint32_t example_index) {
  if (K < 1) throw std::invalid_argument("generate_batches: K must be >= 1");
  validate_axes(axes);

  std::vector<NoiseRealizationBatch> batches(axes.size());
  for (auto& b : batches) {
    b.num_realizations = K;
    b.num_steps = M;
    b.samples.assign(static_cast<size_t>(K) * M, 0.0);
  }

  for (int k = 0; k < K; ++k) {
    for (size_t a = 0; a < axes.size(); ++a) {
      if (axes[a].kind == NoiseKind::N6 || axes[a].kind == NoiseKind::N0) continue;
      RandomStream rng(master_seed, example_index,
                       stream::kNoiseBase + static_cast<uint32_t>(a),
                       static_cast<uint32_t>(k));
      const auto r = generate_realization(axes[a], T, M, rng);
      std::copy(r.begin(), r.end(),
                batches[a].samples.begin() + static_cast<size_t>(k) * M);
    }
    for (size_t a = 0; a < axes.size(); ++a) {
      if (axes[a].kind != NoiseKind::N6) continue;
      const auto* src =
          &batches[axes[a].n6_source_axis].samples[static_cast<size_t>(k) * M];
      auto* dst = &batches[a].samples[static_cast<size_t>(k) * M];
      for (int j = 0; j < M; ++j) dst[j] = src[j] * src[j];
    }
  }
  return batches;
}

}  // namespace qdsim
