#include "doctest.h"

#include <cmath>

#include "qdsim/evolution.hpp"
#include "test_helpers.hpp"

using namespace qdsim;
using qdsim::test::max_abs_diff;
using qdsim::test::random_hermitian;

namespace {

// Determinant via elimination, for the |det U| = 1 check.
cxd determinant(ComplexMatrix m) {
  const int n = m.dim();
  cxd det{1.0, 0.0};
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m.at(r, col)) > std::abs(m.at(pivot, col))) pivot = r;
    }
    if (std::abs(m.at(pivot, col)) == 0.0) return {0.0, 0.0};
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cxd f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace

TEST_CASE("evolve: zero slices give the identity") {
  const std::vector<ComplexMatrix> slices(8, ComplexMatrix::zero(2));
  const auto trace = evolve(slices, 0.01, true);
  CHECK(max_abs_diff(trace.final_unitary, ComplexMatrix::identity(2)) == 0.0);
  CHECK(trace.intermediates.size() == 8);
}

TEST_CASE("evolve: constant slices equal a single exponential") {
  RandomStream rng(2, 0, 1);
  for (int dim : {2, 4}) {
    const auto h = random_hermitian(dim, rng, 3.0);
    const int M = 64;
    const double T = 1.0;
    const std::vector<ComplexMatrix> slices(M, h);
    const auto u = evolve(slices, T / M).final_unitary;
    CHECK(max_abs_diff(u, expm_unitary(h, T)) < 1e-12);
  }
}

TEST_CASE("evolve: sub-stepped slices agree (piecewise-constant exactness)") {
  RandomStream rng(4, 0, 1);
  const int M = 16;
  std::vector<ComplexMatrix> slices;
  for (int j = 0; j < M; ++j) slices.push_back(random_hermitian(2, rng, 4.0));
  const double dt = 1.0 / M;

  const auto direct = evolve(slices, dt).final_unitary;

  std::vector<ComplexMatrix> fine;
  for (const auto& h : slices) {
    for (int s = 0; s < 16; ++s) fine.push_back(h);
  }
  const auto sub = evolve(fine, dt / 16).final_unitary;
  CHECK(max_abs_diff(direct, sub) < 1e-12);
}

TEST_CASE("evolve: group property and unitarity of intermediates") {
  RandomStream rng(6, 0, 1);
  const int M = 24;
  std::vector<ComplexMatrix> slices;
  for (int j = 0; j < M; ++j) slices.push_back(random_hermitian(4, rng, 2.0));
  const double dt = 0.02;

  const auto full = evolve(slices, dt, true);
  for (const auto& u : full.intermediates) {
    CHECK(u.unitarity_defect() <= 1e-10);
  }
  CHECK(std::abs(std::abs(determinant(full.final_unitary)) - 1.0) <= 1e-10);

  const int split = 10;
  const std::vector<ComplexMatrix> head(slices.begin(), slices.begin() + split);
  const std::vector<ComplexMatrix> tail(slices.begin() + split, slices.end());
  const auto combined =
      evolve(tail, dt).final_unitary * evolve(head, dt).final_unitary;
  CHECK((combined - full.final_unitary).frobenius_norm() < 1e-11);
}

TEST_CASE("evolve rejects bad input") {
  CHECK_THROWS_AS(evolve({}, 0.1), std::invalid_argument);
  ComplexMatrix bad(2);
  bad.at(0, 1) = cxd{1.0, 0.0};
  CHECK_THROWS_AS(evolve({bad}, 0.1), std::invalid_argument);
}

TEST_CASE("interaction unitary: identity case and round trip") {
  RandomStream rng(8, 0, 1);
  const auto u0 = qdsim::test::random_unitary(2, rng);
  CHECK(max_abs_diff(interaction_unitary(u0, u0), ComplexMatrix::identity(2)) <
        1e-14);

  const auto u = qdsim::test::random_unitary(2, rng);
  const auto ui = interaction_unitary(u, u0);
  CHECK(ui.unitarity_defect() <= 1e-12);
  CHECK((ui * u0 - u).frobenius_norm() < 1e-12);

  ComplexMatrix not_unitary(2);
  not_unitary.at(0, 0) = 2.0;
  CHECK_THROWS_AS(interaction_unitary(not_unitary, u0), std::invalid_argument);
}
