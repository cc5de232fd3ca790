#pragma once

#include <vector>

#include "qdsim/linalg.hpp"

namespace qdsim {

/// Time-ordered propagation result. intermediates[j] is the cumulative
/// propagator U_j ... U_0 after slice j (retained on request only; K x M
/// unitaries dominate memory at scale).
struct PropagatorTrace {
  ComplexMatrix final_unitary;
  std::vector<ComplexMatrix> intermediates;
  double dt = 0.0;
};

/// U = U_{M-1} ... U_0 with U_j = exp(-i H_j dt); left multiplication,
/// time flows right to left. Slices must be Hermitian.
PropagatorTrace evolve(const std::vector<ComplexMatrix>& slices, double dt,
                       bool keep_intermediates = false);

/// Modified interaction unitary: U_I = U * U0^dagger, so U = U_I * U0.
/// Both inputs must be unitary.
ComplexMatrix interaction_unitary(const ComplexMatrix& u, const ComplexMatrix& u0);

}  // namespace qdsim
