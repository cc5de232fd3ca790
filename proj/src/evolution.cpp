#include "qdsim/evolution.hpp"

#include <stdexcept>

namespace qdsim {

PropagatorTrace evolve(const std::vector<ComplexMatrix>& slices, double dt,
                       bool keep_intermediates) {
  if (slices.empty()) throw std::invalid_argument("evolve: needs at least one slice");
  PropagatorTrace trace;
  trace.dt = dt;
  if (keep_intermediates) trace.intermediates.reserve(slices.size());

  ComplexMatrix u = ComplexMatrix::identity(slices[0].dim());
  for (const auto& h : slices) {
    u = expm_unitary(h, dt) * u;  // expm_unitary rejects non-Hermitian slices
    if (keep_intermediates) trace.intermediates.push_back(u);
  }
  trace.final_unitary = u;
  return trace;
}

ComplexMatrix interaction_unitary(const ComplexMatrix& u,
                                  const ComplexMatrix& u0) {
  if (!u.is_unitary() || !u0.is_unitary()) {
    throw std::invalid_argument("interaction_unitary: inputs must be unitary");
  }
  return u * u0.dagger();
}

}  // namespace qdsim
