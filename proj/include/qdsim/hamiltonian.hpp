#pragma once

#include <string>
#include <vector>

#include "qdsim/linalg.hpp"
#include "qdsim/noise.hpp"
#include "qdsim/pulse.hpp"

namespace qdsim {

enum class Category { cat1 = 1, cat2 = 2, cat3 = 3, cat4 = 4 };

/// Energy gaps: Omega for one qubit, Omega1/Omega2 for two.
struct EnergyGaps {
  double omega = 12.0;
  double omega1 = 12.0;
  double omega2 = 10.0;
};

/// One Hamiltonian term: prefactor * operator, driven by a named control
/// or noise channel. The coefficient applied at slice j is
/// prefactor * f(t_j) (or prefactor * beta(t_j)).
struct HamiltonianAxis {
  std::string tag;  // e.g. "X", "IX", "XX", "Z", "IZ"
  ComplexMatrix op;
  double prefactor = 0.5;
  PsdShape psd_shape = PsdShape::Z;  // PSD family when this axis carries noise
};

/// The four dataset categories: qubit count plus ordered control and
/// noise axes. Axis order matches the naming-convention tags.
struct SystemCategory {
  Category id;
  int nqubits;
  std::vector<HamiltonianAxis> control_axes;
  std::vector<HamiltonianAxis> noise_axes;

  int dim() const { return nqubits == 1 ? 2 : 4; }

  /// half_xx applies the 1/2 that the printed two-qubit control formula
  /// omits on the interacting xx term; default keeps the printed form.
  static SystemCategory make(Category id, bool half_xx = false);
};

ComplexMatrix drift(const SystemCategory& cat, const EnergyGaps& gaps);

/// Per-slice control Hamiltonian: slice j sums prefactor * f_a[j] * op_a.
/// Requires exactly one waveform per control axis.
std::vector<ComplexMatrix> control_slices(const SystemCategory& cat,
                                          const std::vector<Waveform>& waveforms);

/// Per-realization, per-slice noise Hamiltonians (K x M matrices).
std::vector<std::vector<ComplexMatrix>> noise_slices(
    const SystemCategory& cat, const std::vector<NoiseRealizationBatch>& batches);

/// Noise slices for one realization k only.
std::vector<ComplexMatrix> noise_slices_for_realization(
    const SystemCategory& cat, const std::vector<NoiseRealizationBatch>& batches,
    int k);

ComplexMatrix total(const ComplexMatrix& h0_j, const ComplexMatrix& h1_kj);

}  // namespace qdsim
