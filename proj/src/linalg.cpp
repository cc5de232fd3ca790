#include "qdsim/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace qdsim {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("ComplexMatrix dimension must be 2 or 4, got " +
                                std::to_string(dim));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  entries_.fill(cxd{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(int dim) { return ComplexMatrix(dim); }

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

cxd ComplexMatrix::trace() const {
  cxd t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < size(); ++i) s += std::norm(entries_[i]);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in +");
  ComplexMatrix out(dim_);
  for (int i = 0; i < size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in -");
  ComplexMatrix out(dim_);
  for (int i = 0; i < size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in +=");
  for (int i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in *");
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const cxd a = at(r, k);
      if (a == cxd{0.0, 0.0}) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) += a * rhs.at(k, c);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(cxd scalar) const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < size(); ++i) out.entries_[i] = entries_[i] * scalar;
  return out;
}

ComplexMatrix ComplexMatrix::operator*(double scalar) const {
  return (*this) * cxd{scalar, 0.0};
}

double ComplexMatrix::hermiticity_defect() const {
  double s = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) s += std::norm(at(r, c) - std::conj(at(c, r)));
  return std::sqrt(s);
}

double ComplexMatrix::unitarity_defect() const {
  return (dagger() * (*this) - identity(dim_)).frobenius_norm();
}

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::string PauliLabel::str() const {
  if (nqubits == 1) return std::string(1, pauli_char(first));
  return std::string(1, pauli_char(first)) + pauli_char(second);
}

ComplexMatrix pauli(Pauli p) {
  ComplexMatrix m(2);
  switch (p) {
    case Pauli::I:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = 1.0;
      break;
    case Pauli::X:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m.at(0, 1) = cxd{0.0, -1.0};
      m.at(1, 0) = cxd{0.0, 1.0};
      break;
    case Pauli::Z:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix pauli(const PauliLabel& label) {
  if (label.nqubits == 1) return pauli(label.first);
  if (label.nqubits == 2) return tensor(pauli(label.first), pauli(label.second));
  throw std::invalid_argument("PauliLabel supports 1 or 2 qubits");
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("tensor requires two 2x2 factors");
  }
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  return out;
}

namespace {

// exp(-i h dt) for 2x2 Hermitian h via the Pauli rotation formula:
// h = a0*I + v.sigma, exp(-i h dt) = e^{-i a0 dt}(cos(r dt) I - i sin(r dt) v.sigma / r).
ComplexMatrix expm2(const ComplexMatrix& h, double dt) {
  const double a0 = 0.5 * (h.at(0, 0).real() + h.at(1, 1).real());
  const double az = 0.5 * (h.at(0, 0).real() - h.at(1, 1).real());
  const double ax = h.at(0, 1).real();
  const double ay = -h.at(0, 1).imag();
  const double r = std::sqrt(ax * ax + ay * ay + az * az);

  const cxd phase = std::exp(cxd{0.0, -a0 * dt});
  ComplexMatrix out(2);
  if (r == 0.0) {
    out.at(0, 0) = phase;
    out.at(1, 1) = phase;
    return out;
  }
  const double theta = r * dt;
  const double c = std::cos(theta);
  const cxd ms = cxd{0.0, -std::sin(theta) / r};  // -i sin(theta)/r
  out.at(0, 0) = phase * (c + ms * az);
  out.at(0, 1) = phase * (ms * cxd{ax, -ay});
  out.at(1, 0) = phase * (ms * cxd{ax, ay});
  out.at(1, 1) = phase * (c - ms * az);
  return out;
}

ComplexMatrix expm4(const ComplexMatrix& h, double dt) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = h.at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
  Eigen::Vector4d ev = es.eigenvalues();
  Eigen::Vector4cd phases;
  for (int i = 0; i < 4; ++i) phases(i) = std::exp(cxd{0.0, -ev(i) * dt});
  Eigen::Matrix4cd u =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  ComplexMatrix out(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.at(r, c) = u(r, c);
  return out;
}

}  // namespace

ComplexMatrix expm_unitary(const ComplexMatrix& h, double dt) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("expm_unitary: input is not Hermitian (defect " +
                                std::to_string(h.hermiticity_defect()) + ")");
  }
  return h.dim() == 2 ? expm2(h, dt) : expm4(h, dt);
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& o) {
  if (rho.dim() != o.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // Tr(rho o) without forming the product matrix.
  cxd t{0.0, 0.0};
  for (int r = 0; r < rho.dim(); ++r)
    for (int k = 0; k < rho.dim(); ++k) t += rho.at(r, k) * o.at(k, r);
  if (std::abs(t.imag()) > kImagLeakTol) {
    throw std::runtime_error("expectation: imaginary leak " +
                             std::to_string(t.imag()));
  }
  return t.real();
}

}  // namespace qdsim
