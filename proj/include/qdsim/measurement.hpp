#pragma once

#include <string>
#include <vector>

#include "qdsim/linalg.hpp"

namespace qdsim {

/// The six Pauli eigenstates per qubit, ordered x+, x-, y+, y-, z+, z-;
/// two-qubit sets are the 36 outer products, first qubit major.
struct InitialStateSet {
  std::vector<ComplexMatrix> states;
  std::vector<std::string> labels;

  int count() const { return static_cast<int>(states.size()); }
};

/// Measurement observables: (x, y, z) for one qubit; for two qubits the
/// 16 Pauli products in lexicographic order minus the double identity,
/// 15 in total.
struct ObservableSet {
  std::vector<ComplexMatrix> observables;
  std::vector<std::string> labels;

  int count() const { return static_cast<int>(observables.size()); }
};

/// Monte Carlo expectation values. Entries are ordered state-major,
/// observable-minor; per_realization is realization-major on top of
/// that. averaged is the arithmetic mean over realizations (pairwise
/// summation in fixed order, so results are reproducible bitwise).
struct ExpectationTensor {
  int num_realizations = 0;
  int num_states = 0;
  int num_observables = 0;
  std::vector<double> per_realization;  // K * S * O
  std::vector<double> averaged;         // S * O

  double at(int k, int s, int o) const {
    return per_realization[(static_cast<size_t>(k) * num_states + s) *
                               num_observables +
                           o];
  }
  double avg(int s, int o) const {
    return averaged[static_cast<size_t>(s) * num_observables + o];
  }
};

/// Per-observable noise operators: W per realization (optional) and
/// their average V. In a noiseless run every V is the identity.
struct NoiseOperatorSet {
  std::vector<std::vector<ComplexMatrix>> w_per_realization;  // [O][K]
  std::vector<ComplexMatrix> v;                               // [O]
};

InitialStateSet initial_states(int nqubits);
ObservableSet observables(int nqubits);

/// per_realization[k][s][o] = Re Tr(U_k rho_s U_k^dagger O_o). Throws
/// when the trace's imaginary part exceeds 1e-9.
ExpectationTensor monte_carlo(const InitialStateSet& states,
                              const ObservableSet& obs,
                              const std::vector<ComplexMatrix>& propagators);

/// W_O = O U_I^dagger O U_I with U_I = U U0^dagger. Requires O to square
/// to the identity (Pauli observables) and U, U0 unitary. Independent of
/// the initial state by construction.
ComplexMatrix w_operator(const ComplexMatrix& u, const ComplexMatrix& u0,
                         const ComplexMatrix& o);

/// Entrywise mean of the W operators over realizations.
ComplexMatrix v_operator(const std::vector<ComplexMatrix>& w_list);

/// Fixed-order pairwise sum (deterministic, better conditioned than a
/// running sum).
double pairwise_sum(const double* data, size_t n);

}  // namespace qdsim
