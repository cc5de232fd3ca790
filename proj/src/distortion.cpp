#include "qdsim/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdsim {

namespace {
using cxd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
}  // namespace

void AnalogFilterSpec::validate() const {
  if (order < 1) throw std::invalid_argument("filter order must be >= 1");
  if (passband_ripple_db <= 0.0) {
    throw std::invalid_argument("passband ripple must be > 0 dB");
  }
  if (cutoff_rad_per_s <= 0.0) {
    throw std::invalid_argument("cutoff must be > 0 rad/s");
  }
}

double AnalogFilterSpec::ripple_epsilon() const {
  return std::sqrt(std::pow(10.0, passband_ripple_db / 10.0) - 1.0);
}

double AnalogTransferFunction::magnitude(double omega) const {
  cxd denom{1.0, 0.0};
  for (const auto& p : poles) denom *= (cxd{0.0, omega} - p);
  return gain / std::abs(denom);
}

AnalogTransferFunction design_chebyshev1(const AnalogFilterSpec& spec) {
  spec.validate();
  const int n = spec.order;
  const double eps = spec.ripple_epsilon();
  const double mu = std::asinh(1.0 / eps) / n;
  const double wc = spec.cutoff_rad_per_s;

  AnalogTransferFunction tf;
  tf.poles.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const double phi = (2.0 * k - 1.0) * kPi / (2.0 * n);
    tf.poles.emplace_back(-std::sinh(mu) * std::sin(phi) * wc,
                          std::cosh(mu) * std::cos(phi) * wc);
  }

  cxd prod{1.0, 0.0};
  for (const auto& p : tf.poles) prod *= -p;
  double gain = prod.real();  // conjugate pairs, imag cancels
  if (n % 2 == 0) gain /= std::sqrt(1.0 + eps * eps);
  tf.gain = gain;
  return tf;
}

DiscreteFilter DiscreteFilter::identity(double sample_rate) {
  return DiscreteFilter{{1.0}, {1.0}, sample_rate};
}

bool DiscreteFilter::is_identity() const {
  return b.size() == 1 && a.size() == 1 && b[0] == 1.0 && a[0] == 1.0;
}

std::complex<double> DiscreteFilter::transfer(double freq_hz) const {
  const cxd zinv = std::exp(cxd{0.0, -2.0 * kPi * freq_hz / sample_rate});
  cxd num{0.0, 0.0}, den{0.0, 0.0};
  cxd zk{1.0, 0.0};
  for (size_t k = 0; k < std::max(b.size(), a.size()); ++k) {
    if (k < b.size()) num += b[k] * zk;
    if (k < a.size()) den += a[k] * zk;
    zk *= zinv;
  }
  return num / den;
}

DiscreteFilter discretize(const AnalogTransferFunction& analog,
                          double cutoff_rad_per_s, double sample_rate) {
  if (sample_rate <= 2.0 * cutoff_rad_per_s / (2.0 * kPi)) {
    throw std::invalid_argument("sample rate must exceed twice the cutoff");
  }
  const int n = static_cast<int>(analog.poles.size());
  DiscreteFilter f;
  f.sample_rate = sample_rate;
  if (n == 0) {  // pure gain
    f.b = {analog.gain};
    f.a = {1.0};
    return f;
  }

  // s = c (z-1)/(z+1) with c chosen so the discrete response at the
  // analog cutoff equals the analog response there (pre-warp identity).
  const double c = cutoff_rad_per_s / std::tan(cutoff_rad_per_s / (2.0 * sample_rate));

  // H(z) = gain / prod(c - p_i) * (1 + z^-1)^n / prod(1 - z_i z^-1),
  // z_i = (c + p_i)/(c - p_i).
  std::vector<cxd> zpoles(n);
  cxd denom_gain{1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const cxd p = analog.poles[i];
    zpoles[i] = (c + p) / (c - p);
    denom_gain *= (c - p);
    if (std::abs(zpoles[i]) >= 1.0) {
      throw std::runtime_error("discretize: unstable pole, cutoff too near Nyquist");
    }
  }
  const cxd g = analog.gain / denom_gain;

  // Numerator: g * (1 + z^-1)^n.
  std::vector<double> binom(n + 1, 0.0);
  binom[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) binom[j] += binom[j - 1];
  }
  f.b.resize(n + 1);
  for (int i = 0; i <= n; ++i) f.b[i] = g.real() * binom[i];

  // Denominator: prod(1 - z_i z^-1), real because poles come in
  // conjugate pairs.
  std::vector<cxd> acoef{cxd{1.0, 0.0}};
  for (const auto& zp : zpoles) {
    std::vector<cxd> next(acoef.size() + 1, cxd{0.0, 0.0});
    for (size_t i = 0; i < acoef.size(); ++i) {
      next[i] += acoef[i];
      next[i + 1] -= acoef[i] * zp;
    }
    acoef = std::move(next);
  }
  f.a.resize(acoef.size());
  for (size_t i = 0; i < acoef.size(); ++i) f.a[i] = acoef[i].real();
  return f;
}

DiscreteFilter make_distortion_filter(const AnalogFilterSpec& spec,
                                      double sample_rate) {
  return discretize(design_chebyshev1(spec), spec.cutoff_rad_per_s, sample_rate);
}

std::vector<double> apply(const DiscreteFilter& filter,
                          const std::vector<double>& x) {
  const size_t nb = filter.b.size();
  const size_t na = filter.a.size();
  const size_t order = std::max(nb, na) - 1;
  std::vector<double> state(order, 0.0);
  std::vector<double> y(x.size());

  const auto bcoef = [&](size_t i) { return i < nb ? filter.b[i] : 0.0; };
  const auto acoef = [&](size_t i) { return i < na ? filter.a[i] : 0.0; };

  for (size_t t = 0; t < x.size(); ++t) {
    const double out = bcoef(0) * x[t] + (order > 0 ? state[0] : 0.0);
    for (size_t i = 0; i + 1 < order; ++i) {
      state[i] = bcoef(i + 1) * x[t] + state[i + 1] - acoef(i + 1) * out;
    }
    if (order > 0) {
      state[order - 1] = bcoef(order) * x[t] - acoef(order) * out;
    }
    y[t] = out;
  }
  return y;
}

Waveform apply(const DiscreteFilter& filter, const Waveform& w) {
  return Waveform{apply(filter, w.samples)};
}

FrequencyResponse response(const DiscreteFilter& filter,
                           const std::vector<double>& frequencies_hz) {
  FrequencyResponse r;
  r.frequencies = frequencies_hz;
  r.magnitude.reserve(frequencies_hz.size());
  r.phase.reserve(frequencies_hz.size());
  double prev_raw = 0.0;
  double offset = 0.0;
  bool first = true;
  for (double f : frequencies_hz) {
    const cxd h = filter.transfer(f);
    r.magnitude.push_back(std::abs(h));
    const double raw = std::arg(h);
    if (!first) {
      double d = raw - prev_raw;
      while (d > kPi) {
        offset -= 2.0 * kPi;
        d -= 2.0 * kPi;
      }
      while (d < -kPi) {
        offset += 2.0 * kPi;
        d += 2.0 * kPi;
      }
    }
    first = false;
    prev_raw = raw;
    r.phase.push_back(raw + offset);
  }
  return r;
}

}  // namespace qdsim
