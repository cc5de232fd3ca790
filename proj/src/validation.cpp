#include "qdsim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdsim/dataset.hpp"
#include "qdsim/distortion.hpp"
#include "qdsim/evolution.hpp"
#include "qdsim/fft.hpp"
#include "qdsim/parallel.hpp"
#include "qdsim/rng.hpp"

namespace qdsim {

namespace {

/// Gauss-Jordan inverse with partial pivoting, dims 2 and 4 only. Kept
/// here so the oracle path stays independent of the main kernel's
/// eigendecomposition route.
ComplexMatrix inverse(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a.at(r, col)) > best) {
        best = std::abs(a.at(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) throw std::runtime_error("inverse: singular matrix");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const cxd scale = 1.0 / a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cxd factor = a.at(r, col);
      if (factor == cxd{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= factor * a.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

/// Newton iteration for the unitary polar factor: X <- (X + (X^dagger)^-1)/2.
ComplexMatrix polar_unitary(ComplexMatrix x) {
  for (int iter = 0; iter < 30; ++iter) {
    if (x.unitarity_defect() <= 1e-15) break;
    const ComplexMatrix corrected = inverse(x.dagger());
    ComplexMatrix next(x.dim());
    for (int r = 0; r < x.dim(); ++r)
      for (int c = 0; c < x.dim(); ++c)
        next.at(r, c) = 0.5 * (x.at(r, c) + corrected.at(r, c));
    x = next;
  }
  return x;
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["passed"] = passed;
  j["mean_abs_error"] = mean_abs_error;
  j["max_abs_error"] = max_abs_error;
  j["per_observable_error"] = per_observable_error;
  j["psd_band_errors"] = psd_band_errors;
  j["correlation_lag"] = correlation_lag;
  j["peak_ratio"] = peak_ratio;
  j["linearity_residual"] = linearity_residual;
  j["details"] = details;
  return j;
}

ComplexMatrix oracle_evolve(const std::vector<ComplexMatrix>& slices, double dt,
                            int substeps) {
  if (substeps < 4) {
    throw std::invalid_argument("oracle_evolve: substeps must be >= 4");
  }
  if (slices.empty()) {
    throw std::invalid_argument("oracle_evolve: needs at least one slice");
  }
  const int dim = slices[0].dim();
  ComplexMatrix u = ComplexMatrix::identity(dim);
  const double h = dt / substeps;
  const cxd mi{0.0, -1.0};

  for (const auto& slice : slices) {
    const ComplexMatrix a = mi * slice;  // dU/dt = -i H U
    for (int s = 0; s < substeps; ++s) {
      const ComplexMatrix k1 = a * u;
      const ComplexMatrix k2 = a * (u + (0.5 * h) * k1);
      const ComplexMatrix k3 = a * (u + (0.5 * h) * k2);
      const ComplexMatrix k4 = a * (u + h * k3);
      u = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return polar_unitary(u);
}

ValidationReport compare_expectations(const ExpectationTensor& sim,
                                      const ExpectationTensor& oracle,
                                      double tolerance) {
  if (sim.num_states != oracle.num_states ||
      sim.num_observables != oracle.num_observables) {
    throw std::invalid_argument("compare_expectations: tensor shapes differ");
  }
  ValidationReport report;
  report.check = "expectation-cross-check";

  const int S = sim.num_states;
  const int O = sim.num_observables;
  std::vector<double> all_errors;
  all_errors.reserve(static_cast<size_t>(S) * O);
  report.per_observable_error.assign(O, 0.0);
  for (int o = 0; o < O; ++o) {
    double per_obs = 0.0;
    for (int s = 0; s < S; ++s) {
      const double err = std::abs(sim.avg(s, o) - oracle.avg(s, o));
      all_errors.push_back(err);
      per_obs += err;
    }
    report.per_observable_error[o] = per_obs / S;
  }
  report.mean_abs_error = mean(all_errors);
  report.max_abs_error =
      all_errors.empty() ? 0.0 : *std::max_element(all_errors.begin(), all_errors.end());

  const double worst_per_obs =
      *std::max_element(report.per_observable_error.begin(),
                        report.per_observable_error.end());
  report.passed =
      report.mean_abs_error <= tolerance && worst_per_obs <= tolerance;
  report.details = {{"tolerance", tolerance},
                    {"num_states", S},
                    {"num_observables", O},
                    {"worst_per_observable", worst_per_obs}};
  return report;
}

ValidationReport verify_psd(const NoiseRealizationBatch& realizations,
                            const PSDSpec& S, double T, double tolerance,
                            int smooth_bins) {
  const int K = realizations.num_realizations;
  const int M = realizations.num_steps;
  if (K < 1 || M < 4) {
    throw std::invalid_argument("verify_psd: batch too small");
  }

  ValidationReport report;
  report.check = "psd-recovery";

  // Averaged periodogram, same bin convention as the generator:
  // S_est(j) = (T/M^2) <|FFT(beta)_j|^2>.
  std::vector<double> est(M / 2, 0.0);
  std::vector<std::complex<double>> buf(M);
  for (int k = 0; k < K; ++k) {
    for (int j = 0; j < M; ++j) buf[j] = realizations.at(k, j);
    fft_inplace(buf, false);
    for (int j = 0; j < M / 2; ++j) est[j] += std::norm(buf[j]);
  }
  const double scale = T / (static_cast<double>(M) * M * K);
  for (auto& v : est) v *= scale;

  // Resolvable comparison band: bins 1..50 (omega in [2 pi / T, 2 pi 50 / T]).
  const int jmax = std::min(50, M / 2 - 1);
  double worst = 0.0;
  for (int j0 = 1; j0 + smooth_bins - 1 <= jmax; j0 += smooth_bins) {
    double band_est = 0.0, band_ref = 0.0;
    for (int j = j0; j < j0 + smooth_bins; ++j) {
      band_est += est[j];
      band_ref += S(2.0 * std::numbers::pi * j / T);
    }
    band_est /= smooth_bins;
    band_ref /= smooth_bins;
    const double err =
        band_ref > 0.0 ? std::abs(band_est - band_ref) / band_ref : band_est;
    report.psd_band_errors.push_back(err);
    worst = std::max(worst, err);
  }
  report.mean_abs_error = mean(report.psd_band_errors);
  report.max_abs_error = worst;
  report.passed = worst <= tolerance;
  report.details = {{"tolerance", tolerance},
                    {"smooth_bins", smooth_bins},
                    {"num_realizations", K},
                    {"band_max_bin", jmax}};
  return report;
}

ValidationReport verify_distortion(const std::vector<Waveform>& pulses,
                                   const std::vector<Waveform>& distorted) {
  if (pulses.size() != distorted.size() || pulses.empty()) {
    throw std::invalid_argument("verify_distortion: axis count mismatch");
  }
  ValidationReport report;
  report.check = "distortion-properties";

  double min_lag = 1e30;
  double max_ratio = 0.0;
  for (size_t a = 0; a < pulses.size(); ++a) {
    const auto& x = pulses[a].samples;
    const auto& y = distorted[a].samples;
    if (x.size() != y.size() || x.empty()) {
      throw std::invalid_argument("verify_distortion: waveform length mismatch");
    }
    const int M = static_cast<int>(x.size());
    const int L = std::max(1, M / 4);

    // argmax_l sum_t x[t] y[t+l]; positive lag means the output trails
    // the input.
    int best_lag = 0;
    double best = -1e300;
    for (int l = -L; l <= L; ++l) {
      double c = 0.0;
      for (int t = std::max(0, -l); t < M && t + l < M; ++t) c += x[t] * y[t + l];
      if (c > best) {
        best = c;
        best_lag = l;
      }
    }
    min_lag = std::min(min_lag, static_cast<double>(best_lag));

    double peak_x = 0.0, peak_y = 0.0;
    for (int t = 0; t < M; ++t) {
      peak_x = std::max(peak_x, std::abs(x[t]));
      peak_y = std::max(peak_y, std::abs(y[t]));
    }
    max_ratio = std::max(max_ratio, peak_x > 0.0 ? peak_y / peak_x : 1.0);
  }

  report.correlation_lag = min_lag;
  report.peak_ratio = max_ratio;
  report.passed = min_lag >= 0.0 && max_ratio <= 1.0 + 1e-12;
  report.details = {{"axes", pulses.size()}};
  return report;
}

ValidationReport verify_filter_properties(const DiscreteFilter& filter, int M,
                                          uint64_t seed) {
  ValidationReport report;
  report.check = "filter-properties";

  RandomStream rng(seed, 0, stream::kPulseBase);
  std::vector<double> w1(M), w2(M);
  for (int j = 0; j < M; ++j) {
    w1[j] = rng.uniform(-1.0, 1.0);
    w2[j] = rng.uniform(-1.0, 1.0);
  }

  const double alpha = 0.7, beta = -1.3;
  std::vector<double> combo(M);
  for (int j = 0; j < M; ++j) combo[j] = alpha * w1[j] + beta * w2[j];
  const auto y_combo = qdsim::apply(filter, combo);
  const auto y1 = qdsim::apply(filter, w1);
  const auto y2 = qdsim::apply(filter, w2);
  double lin = 0.0;
  for (int j = 0; j < M; ++j) {
    lin = std::max(lin, std::abs(y_combo[j] - alpha * y1[j] - beta * y2[j]));
  }

  // Time invariance: a zero-padded shift of the input shifts the output
  // exactly (zero initial state), so only rounding remains.
  const int shift = std::max(1, M / 16);
  std::vector<double> shifted(M, 0.0);
  for (int j = shift; j < M; ++j) shifted[j] = w1[j - shift];
  const auto y_shifted = qdsim::apply(filter, shifted);
  double tinv = 0.0;
  for (int j = shift; j < M; ++j) {
    tinv = std::max(tinv, std::abs(y_shifted[j] - y1[j - shift]));
  }

  report.linearity_residual = lin;
  report.details = {{"time_invariance_residual", tinv}, {"shift", shift}};
  report.mean_abs_error = std::max(lin, tinv);
  report.max_abs_error = report.mean_abs_error;
  report.passed = lin <= 1e-10 && tinv <= 1e-10;
  return report;
}

ValidationReport cross_validate(const DatasetConfig& cfg, int num_examples,
                                int substeps, double tolerance, int threads) {
  const SystemCategory cat = cfg.system();
  const int M = cfg.pulse.num_steps;
  const double T = cfg.pulse.total_time;
  const double dt = T / M;
  const int K = cfg.num_realizations;
  const auto axes = cfg.axis_noise();
  const bool gaussian = cfg.name.waveform == 'G';

  const InitialStateSet states = initial_states(cat.nqubits);
  const ObservableSet obs = observables(cat.nqubits);

  std::vector<double> example_means;
  std::vector<double> per_obs(obs.count(), 0.0);
  double max_err = 0.0;

  for (int ex = 0; ex < num_examples; ++ex) {
    std::vector<Waveform> pulses(cat.control_axes.size());
    for (size_t a = 0; a < cat.control_axes.size(); ++a) {
      RandomStream rng(cfg.master_seed, static_cast<uint32_t>(ex),
                       stream::kPulseBase + static_cast<uint32_t>(a));
      if (gaussian) {
        pulses[a] = sample(random_gaussian(cfg.pulse, rng), cfg.pulse);
      } else {
        pulses[a] = sample(random_square(cfg.pulse, rng), cfg.pulse);
      }
    }
    if (cfg.name.distorted) {
      const DiscreteFilter filter = make_distortion_filter(cfg.filter, M / T);
      for (auto& w : pulses) w = qdsim::apply(filter, w);
    }

    std::vector<ComplexMatrix> h0 = control_slices(cat, pulses);
    const ComplexMatrix h_drift = drift(cat, cfg.gaps);
    for (auto& h : h0) h += h_drift;

    std::vector<NoiseRealizationBatch> batches;
    if (!axes.empty()) {
      batches = generate_batches(axes, K, T, M, cfg.master_seed,
                                 static_cast<uint32_t>(ex));
    }

    const int R = axes.empty() ? 1 : K;
    std::vector<ComplexMatrix> u_sim(R), u_oracle(R);
    parallel_for(R, threads, [&](int k) {
      std::vector<ComplexMatrix> slices;
      if (axes.empty()) {
        slices = h0;
      } else {
        slices = noise_slices_for_realization(cat, batches, k);
        for (int j = 0; j < M; ++j) slices[j] += h0[j];
      }
      u_sim[k] = evolve(slices, dt).final_unitary;
      u_oracle[k] = oracle_evolve(slices, dt, substeps);
    });

    const ExpectationTensor t_sim = monte_carlo(states, obs, u_sim);
    const ExpectationTensor t_oracle = monte_carlo(states, obs, u_oracle);
    const ValidationReport r = compare_expectations(t_sim, t_oracle, tolerance);
    example_means.push_back(r.mean_abs_error);
    max_err = std::max(max_err, r.max_abs_error);
    for (int o = 0; o < obs.count(); ++o) {
      per_obs[o] += r.per_observable_error[o] / num_examples;
    }
  }

  ValidationReport report;
  report.check = "oracle-cross-validation";
  report.mean_abs_error = mean(example_means);
  report.max_abs_error = max_err;
  report.per_observable_error = per_obs;
  const double worst_per_obs =
      per_obs.empty() ? 0.0 : *std::max_element(per_obs.begin(), per_obs.end());
  report.passed =
      report.mean_abs_error <= tolerance && worst_per_obs <= tolerance;
  report.details = {{"num_examples", num_examples},
                    {"substeps", substeps},
                    {"tolerance", tolerance},
                    {"K", K},
                    {"worst_per_observable", worst_per_obs},
                    {"name", cfg.canonical_name()}};
  return report;
}

}  // namespace qdsim
