#include "qdsim/measurement.hpp"

#include <stdexcept>

namespace qdsim {

namespace {

constexpr double kMonteCarloImagTol = 1e-9;

ComplexMatrix eigenstate(Pauli p, int sign) {
  return 0.5 * (ComplexMatrix::identity(2) + static_cast<double>(sign) * pauli(p));
}

double real_expectation(const ComplexMatrix& rho, const ComplexMatrix& o) {
  cxd t{0.0, 0.0};
  for (int r = 0; r < rho.dim(); ++r)
    for (int k = 0; k < rho.dim(); ++k) t += rho.at(r, k) * o.at(k, r);
  if (std::abs(t.imag()) > kMonteCarloImagTol) {
    throw std::runtime_error("monte_carlo: imaginary leak " +
                             std::to_string(t.imag()));
  }
  return t.real();
}

}  // namespace

double pairwise_sum(const double* data, size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

InitialStateSet initial_states(int nqubits) {
  static const std::pair<Pauli, int> kOrder[6] = {
      {Pauli::X, +1}, {Pauli::X, -1}, {Pauli::Y, +1},
      {Pauli::Y, -1}, {Pauli::Z, +1}, {Pauli::Z, -1}};
  static const char* kNames[6] = {"x+", "x-", "y+", "y-", "z+", "z-"};

  InitialStateSet set;
  if (nqubits == 1) {
    for (int i = 0; i < 6; ++i) {
      set.states.push_back(eigenstate(kOrder[i].first, kOrder[i].second));
      set.labels.emplace_back(kNames[i]);
    }
    return set;
  }
  if (nqubits == 2) {
    for (int i = 0; i < 6; ++i) {
      const auto first = eigenstate(kOrder[i].first, kOrder[i].second);
      for (int j = 0; j < 6; ++j) {
        set.states.push_back(
            tensor(first, eigenstate(kOrder[j].first, kOrder[j].second)));
        set.labels.push_back(std::string(kNames[i]) + kNames[j]);
      }
    }
    return set;
  }
  throw std::invalid_argument("initial_states: nqubits must be 1 or 2");
}

ObservableSet observables(int nqubits) {
  ObservableSet set;
  if (nqubits == 1) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      set.observables.push_back(pauli(p));
      set.labels.emplace_back(1, pauli_char(p));
    }
    return set;
  }
  if (nqubits == 2) {
    static const Pauli kAll[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli a : kAll) {
      for (Pauli b : kAll) {
        if (a == Pauli::I && b == Pauli::I) continue;  // identity excluded
        set.observables.push_back(pauli(PauliLabel::two(a, b)));
        set.labels.push_back(std::string(1, pauli_char(a)) + pauli_char(b));
      }
    }
    return set;
  }
  throw std::invalid_argument("observables: nqubits must be 1 or 2");
}

ExpectationTensor monte_carlo(const InitialStateSet& states,
                              const ObservableSet& obs,
                              const std::vector<ComplexMatrix>& propagators) {
  const int K = static_cast<int>(propagators.size());
  if (K < 1) throw std::invalid_argument("monte_carlo: K must be >= 1");
  const int S = states.count();
  const int O = obs.count();

  ExpectationTensor tensor;
  tensor.num_realizations = K;
  tensor.num_states = S;
  tensor.num_observables = O;
  tensor.per_realization.resize(static_cast<size_t>(K) * S * O);

  for (int k = 0; k < K; ++k) {
    const ComplexMatrix& u = propagators[k];
    const ComplexMatrix udag = u.dagger();
    for (int s = 0; s < S; ++s) {
      const ComplexMatrix evolved = u * states.states[s] * udag;
      for (int o = 0; o < O; ++o) {
        const double v = real_expectation(evolved, obs.observables[o]);
        if (v < -1.0 - 1e-9 || v > 1.0 + 1e-9) {
          throw std::runtime_error("monte_carlo: expectation " +
                                   std::to_string(v) + " outside [-1, 1]");
        }
        tensor.per_realization[(static_cast<size_t>(k) * S + s) * O + o] = v;
      }
    }
  }

  tensor.averaged.resize(static_cast<size_t>(S) * O);
  std::vector<double> column(K);
  for (int s = 0; s < S; ++s) {
    for (int o = 0; o < O; ++o) {
      for (int k = 0; k < K; ++k) column[k] = tensor.at(k, s, o);
      tensor.averaged[static_cast<size_t>(s) * O + o] =
          pairwise_sum(column.data(), column.size()) / K;
    }
  }
  return tensor;
}

ComplexMatrix w_operator(const ComplexMatrix& u, const ComplexMatrix& u0,
                         const ComplexMatrix& o) {
  if (!u.is_unitary() || !u0.is_unitary()) {
    throw std::invalid_argument("w_operator: propagators must be unitary");
  }
  // Pauli observables are involutory, which is what makes O^{-1} = O.
  if ((o * o - ComplexMatrix::identity(o.dim())).frobenius_norm() > 1e-10) {
    throw std::invalid_argument("w_operator: observable must square to identity");
  }
  const ComplexMatrix ui = u * u0.dagger();
  return o * ui.dagger() * o * ui;
}

ComplexMatrix v_operator(const std::vector<ComplexMatrix>& w_list) {
  if (w_list.empty()) throw std::invalid_argument("v_operator: empty W list");
  const int dim = w_list[0].dim();
  const size_t K = w_list.size();
  ComplexMatrix v(dim);
  std::vector<double> re(K), im(K);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      for (size_t k = 0; k < K; ++k) {
        re[k] = w_list[k].at(r, c).real();
        im[k] = w_list[k].at(r, c).imag();
      }
      v.at(r, c) = cxd{pairwise_sum(re.data(), K) / static_cast<double>(K),
                       pairwise_sum(im.data(), K) / static_cast<double>(K)};
    }
  }
  return v;
}

}  // namespace qdsim
