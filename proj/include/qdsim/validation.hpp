#pragma once

#include <string>
#include <vector>

#include "qdsim/distortion.hpp"
#include "qdsim/linalg.hpp"
#include "qdsim/measurement.hpp"
#include "qdsim/noise.hpp"
#include "qdsim/pulse.hpp"

#include "json.hpp"

namespace qdsim {

/// Outcome of one validation check, serializable to JSON; `passed`
/// aggregates every sub-check against its declared tolerance.
struct ValidationReport {
  std::string check;
  bool passed = false;
  double mean_abs_error = 0.0;
  double max_abs_error = 0.0;
  std::vector<double> per_observable_error;
  std::vector<double> psd_band_errors;
  double correlation_lag = 0.0;
  double peak_ratio = 1.0;
  double linearity_residual = 0.0;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

/// Independent integrator for cross-checking: classical RK4 on
/// dU/dt = -i H U with `substeps` steps per piecewise-constant slice,
/// then a Newton polar correction of the final product. Shares no code
/// with the eigendecomposition exponential used by the main pipeline.
ComplexMatrix oracle_evolve(const std::vector<ComplexMatrix>& slices, double dt,
                            int substeps = 64);

/// Elementwise comparison of two expectation tensors: overall mean and
/// max absolute error plus the per-observable means of the paper's
/// second validation mode.
ValidationReport compare_expectations(const ExpectationTensor& sim,
                                      const ExpectationTensor& oracle,
                                      double tolerance = 1e-6);

/// Averaged-periodogram check of PSD-profiled realizations against S on
/// omega in [2 pi / T, 2 pi * 50 / T] with smoothing over groups of
/// `smooth_bins` bins.
ValidationReport verify_psd(const NoiseRealizationBatch& realizations,
                            const PSDSpec& S, double T,
                            double tolerance = 0.05, int smooth_bins = 4);

/// Distortion sanity: nonnegative cross-correlation lag (delay), peak
/// amplitude ratio <= 1 and linearity of the filter.
ValidationReport verify_distortion(const std::vector<Waveform>& pulses,
                                   const std::vector<Waveform>& distorted);

/// Linearity and time-invariance residuals of a filter on random probes.
ValidationReport verify_filter_properties(const DiscreteFilter& filter,
                                          int M = 1024, uint64_t seed = 7);

/// Full cross-check of the main integrator against the RK4 oracle:
/// builds the slice Hamiltonians of `num_examples` examples of a
/// config (noise realizations matched bitwise between both sides),
/// propagates each with both integrators and compares the resulting
/// expectation tensors.
ValidationReport cross_validate(const struct DatasetConfig& cfg,
                                int num_examples, int substeps = 64,
                                double tolerance = 1e-6, int threads = 1);

}  // namespace qdsim
