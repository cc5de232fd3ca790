#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qdsim {

using cxd = std::complex<double>;

// Tolerances shared across the numerical kernel. The simulator's own
// cross-validation target is 1e-6, so these sit four orders below it.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kImagLeakTol = 1e-10;

/// Dense square complex matrix of dimension 2 or 4, row-major storage.
/// The single carrier type for states, Hamiltonians, unitaries and
/// observables. Values are immutable in spirit: all operations return
/// new matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(2) { entries_.fill(cxd{0.0, 0.0}); }
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim);

  int dim() const { return dim_; }
  int size() const { return dim_ * dim_; }

  cxd& at(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
  const cxd& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * dim_ + c];
  }
  const cxd* data() const { return entries_.data(); }
  cxd* data() { return entries_.data(); }

  ComplexMatrix dagger() const;
  cxd trace() const;
  double frobenius_norm() const;

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix operator*(cxd scalar) const;
  ComplexMatrix operator*(double scalar) const;

  /// ||A - A^dagger||_F
  double hermiticity_defect() const;
  /// ||A^dagger A - I||_F
  double unitarity_defect() const;
  bool is_hermitian(double tol = kHermiticityTol) const {
    return hermiticity_defect() <= tol;
  }
  bool is_unitary(double tol = kUnitarityTol) const {
    return unitarity_defect() <= tol;
  }

 private:
  int dim_;
  std::array<cxd, 16> entries_;  // dim^2 used, rest zero
};

inline ComplexMatrix operator*(double scalar, const ComplexMatrix& m) {
  return m * scalar;
}
inline ComplexMatrix operator*(cxd scalar, const ComplexMatrix& m) {
  return m * scalar;
}

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// One- or two-qubit Pauli label. Two-qubit labels are ordered pairs;
/// the left factor acts on the first qubit.
struct PauliLabel {
  Pauli first;
  Pauli second;  // ignored when nqubits == 1
  int nqubits;

  static PauliLabel one(Pauli p) { return {p, Pauli::I, 1}; }
  static PauliLabel two(Pauli a, Pauli b) { return {a, b, 2}; }
  std::string str() const;
};

/// Standard Pauli matrix for the label; two-qubit labels give the
/// Kronecker product with the first qubit as the left factor.
ComplexMatrix pauli(const PauliLabel& label);
ComplexMatrix pauli(Pauli p);

/// Kronecker product of two 2x2 matrices, block layout a_ij * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i h dt) for Hermitian h. Dim 2 uses the closed-form Pauli
/// rotation; dim 4 diagonalizes. Throws std::invalid_argument when h is
/// not Hermitian within kHermiticityTol. Result is unitary to rounding.
ComplexMatrix expm_unitary(const ComplexMatrix& h, double dt);

/// Re Tr(rho * o). Throws std::runtime_error when the imaginary part of
/// the trace exceeds kImagLeakTol (signals numerical corruption).
double expectation(const ComplexMatrix& rho, const ComplexMatrix& o);

}  // namespace qdsim
