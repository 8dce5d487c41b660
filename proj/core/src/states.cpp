#include "chiralsim/states.hpp"

#include <cmath>

namespace chiralsim {

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) {
    throw BadDimensionError("StateVector: dimension must be >= 1");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kStructuralTol) {
    throw NotNormalizedError("StateVector: norm differs from 1 beyond tolerance");
  }
}

Complex StateVector::overlap(const StateVector& other) const {
  if (dim() != other.dim()) {
    throw DimensionMismatchError("StateVector::overlap: dimension mismatch");
  }
  return amplitudes_.dot(other.amplitudes_);  // <this|other>
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw BadStateError("DensityMatrix: matrix must be square");
  }
  if (hermiticity_defect(matrix_) > kStructuralTol) {
    throw BadStateError("DensityMatrix: matrix is not Hermitian within tolerance");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > kStructuralTol ||
      std::abs(matrix_.trace().imag()) > kStructuralTol) {
    throw BadStateError("DensityMatrix: trace differs from 1 beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStructuralTol) {
    throw BadStateError("DensityMatrix: negative eigenvalue beyond tolerance");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const ComplexVector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& obs) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim()) {
    throw DimensionMismatchError("expectation: observable dimension mismatch");
  }
  if (hermiticity_defect(obs) > kStructuralTol) {
    throw NotHermitianError("expectation: observable is not Hermitian");
  }
  const Complex value = (rho.matrix() * obs).trace();
  if (std::abs(value.imag()) > kStructuralTol) {
    throw Error("expectation: imaginary residue above tolerance");
  }
  return value.real();
}

StateVector basis_state(Eigen::Index dim, Eigen::Index index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

StateVector singlet_vector() {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);   // |01>
  v(2) = -1.0 / std::sqrt(2.0);  // |10>
  return StateVector(std::move(v));
}

DensityMatrix singlet() { return DensityMatrix::from_pure(singlet_vector()); }

DensityMatrix werner(double p) {
  return DensityMatrix(p * singlet().matrix() + (1.0 - p) * 0.25 * identity(4));
}

DensityMatrix maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

}  // namespace chiralsim
