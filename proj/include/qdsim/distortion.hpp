#pragma once

#include <complex>
#include <vector>

#include "qdsim/pulse.hpp"

namespace qdsim {

/// Chebyshev Type I low-pass specification. Defaults are the fixed
/// distortion model shared by every dataset: order 4, 0.5 dB ripple,
/// cutoff 2*pi*20 rad/s.
struct AnalogFilterSpec {
  int order = 4;
  double passband_ripple_db = 0.5;
  double cutoff_rad_per_s = 2.0 * 3.14159265358979323846 * 20.0;

  void validate() const;
  /// epsilon = sqrt(10^(ripple/10) - 1)
  double ripple_epsilon() const;
};

/// Analog all-pole transfer function H(s) = gain / prod(s - poles[i]).
struct AnalogTransferFunction {
  std::vector<std::complex<double>> poles;
  double gain = 1.0;

  double magnitude(double omega) const;
};

/// Discrete IIR filter b/a with a[0] = 1; stable by construction
/// (discretize rejects otherwise).
struct DiscreteFilter {
  std::vector<double> b;
  std::vector<double> a;
  double sample_rate = 1.0;

  static DiscreteFilter identity(double sample_rate = 1.0);
  bool is_identity() const;
  std::complex<double> transfer(double freq_hz) const;
};

struct FrequencyResponse {
  std::vector<double> frequencies;  // Hz
  std::vector<double> magnitude;
  std::vector<double> phase;  // rad, unwrapped
};

/// Chebyshev Type I low-pass prototype scaled to the requested cutoff;
/// gain normalized so the passband peak magnitude is 1 (so DC gain is
/// 1 for odd orders, 1/sqrt(1+eps^2) for even orders).
AnalogTransferFunction design_chebyshev1(const AnalogFilterSpec& spec);

/// Bilinear transform, pre-warped so the discrete response at the analog
/// cutoff matches the analog response there. Throws when the result is
/// unstable (cutoff too near Nyquist).
DiscreteFilter discretize(const AnalogTransferFunction& analog,
                          double cutoff_rad_per_s, double sample_rate);

/// Convenience: design + discretize at the waveform sample rate M/T.
DiscreteFilter make_distortion_filter(const AnalogFilterSpec& spec,
                                      double sample_rate);

/// Direct-form II transposed filtering, zero initial state, output
/// length equals input length.
Waveform apply(const DiscreteFilter& filter, const Waveform& w);
std::vector<double> apply(const DiscreteFilter& filter,
                          const std::vector<double>& x);

FrequencyResponse response(const DiscreteFilter& filter,
                           const std::vector<double>& frequencies_hz);

}  // namespace qdsim
