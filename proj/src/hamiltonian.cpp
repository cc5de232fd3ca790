#include "qdsim/hamiltonian.hpp"

#include <stdexcept>

namespace qdsim {

namespace {

ComplexMatrix two_qubit(Pauli a, Pauli b) { return tensor(pauli(a), pauli(b)); }

}  // namespace

SystemCategory SystemCategory::make(Category id, bool half_xx) {
  SystemCategory cat;
  cat.id = id;
  switch (id) {
    case Category::cat1:
      cat.nqubits = 1;
      cat.control_axes = {{"X", pauli(Pauli::X), 0.5, PsdShape::X}};
      cat.noise_axes = {{"Z", pauli(Pauli::Z), 0.5, PsdShape::Z}};
      break;
    case Category::cat2:
      cat.nqubits = 1;
      cat.control_axes = {{"X", pauli(Pauli::X), 0.5, PsdShape::X},
                          {"Y", pauli(Pauli::Y), 0.5, PsdShape::X}};
      cat.noise_axes = {{"X", pauli(Pauli::X), 0.5, PsdShape::X},
                        {"Z", pauli(Pauli::Z), 0.5, PsdShape::Z}};
      break;
    case Category::cat3:
      cat.nqubits = 2;
      cat.control_axes = {{"IX", two_qubit(Pauli::I, Pauli::X), 0.5, PsdShape::X},
                          {"XI", two_qubit(Pauli::X, Pauli::I), 0.5, PsdShape::X}};
      cat.noise_axes = {{"IZ", two_qubit(Pauli::I, Pauli::Z), 0.5, PsdShape::Z},
                        {"ZI", two_qubit(Pauli::Z, Pauli::I), 0.5, PsdShape::Z}};
      break;
    case Category::cat4:
      cat.nqubits = 2;
      cat.control_axes = {{"IX", two_qubit(Pauli::I, Pauli::X), 0.5, PsdShape::X},
                          {"XI", two_qubit(Pauli::X, Pauli::I), 0.5, PsdShape::X},
                          // printed formula carries no 1/2 on the xx term
                          {"XX", two_qubit(Pauli::X, Pauli::X),
                           half_xx ? 0.5 : 1.0, PsdShape::X}};
      cat.noise_axes = {{"IZ", two_qubit(Pauli::I, Pauli::Z), 0.5, PsdShape::Z},
                        {"ZI", two_qubit(Pauli::Z, Pauli::I), 0.5, PsdShape::Z}};
      break;
  }
  return cat;
}

ComplexMatrix drift(const SystemCategory& cat, const EnergyGaps& gaps) {
  if (cat.nqubits == 1) {
    return 0.5 * gaps.omega * pauli(Pauli::Z);
  }
  return 0.5 * gaps.omega1 * two_qubit(Pauli::Z, Pauli::I) +
         0.5 * gaps.omega2 * two_qubit(Pauli::I, Pauli::Z);
}

std::vector<ComplexMatrix> control_slices(const SystemCategory& cat,
                                          const std::vector<Waveform>& waveforms) {
  if (waveforms.size() != cat.control_axes.size()) {
    throw std::invalid_argument("control_slices: expected " +
                                std::to_string(cat.control_axes.size()) +
                                " waveforms, got " +
                                std::to_string(waveforms.size()));
  }
  const size_t steps = waveforms.empty() ? 0 : waveforms[0].size();
  for (const auto& w : waveforms) {
    if (w.size() != steps) {
      throw std::invalid_argument("control_slices: waveform lengths differ");
    }
  }
  std::vector<ComplexMatrix> slices(steps, ComplexMatrix::zero(cat.dim()));
  for (size_t a = 0; a < cat.control_axes.size(); ++a) {
    const auto& axis = cat.control_axes[a];
    for (size_t j = 0; j < steps; ++j) {
      slices[j] += (axis.prefactor * waveforms[a][j]) * axis.op;
    }
  }
  return slices;
}

std::vector<ComplexMatrix> noise_slices_for_realization(
    const SystemCategory& cat, const std::vector<NoiseRealizationBatch>& batches,
    int k) {
  if (batches.size() != cat.noise_axes.size()) {
    throw std::invalid_argument("noise_slices: expected " +
                                std::to_string(cat.noise_axes.size()) +
                                " batches, got " + std::to_string(batches.size()));
  }
  const int steps = batches.empty() ? 0 : batches[0].num_steps;
  for (const auto& b : batches) {
    if (b.num_steps != steps || k >= b.num_realizations) {
      throw std::invalid_argument("noise_slices: batch shape mismatch");
    }
  }
  std::vector<ComplexMatrix> slices(steps, ComplexMatrix::zero(cat.dim()));
  for (size_t a = 0; a < cat.noise_axes.size(); ++a) {
    const auto& axis = cat.noise_axes[a];
    for (int j = 0; j < steps; ++j) {
      slices[j] += (axis.prefactor * batches[a].at(k, j)) * axis.op;
    }
  }
  return slices;
}

std::vector<std::vector<ComplexMatrix>> noise_slices(
    const SystemCategory& cat, const std::vector<NoiseRealizationBatch>& batches) {
  const int K = batches.empty() ? 0 : batches[0].num_realizations;
  std::vector<std::vector<ComplexMatrix>> out;
  out.reserve(K);
  for (int k = 0; k < K; ++k) {
    out.push_back(noise_slices_for_realization(cat, batches, k));
  }
  return out;
}

ComplexMatrix total(const ComplexMatrix& h0_j, const ComplexMatrix& h1_kj) {
  return h0_j + h1_kj;
}

}  // namespace qdsim
