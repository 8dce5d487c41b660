#pragma once

#include "chiralsim/linalg.hpp"

namespace chiralsim {

/// A normalized pure state. Construction validates unit norm (1e-10).
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index i) const { return amplitudes_(i); }

  Complex overlap(const StateVector& other) const;

 private:
  ComplexVector amplitudes_;
};

/// A valid density matrix: Hermitian, unit trace, eigenvalues >= -1e-10.
/// Construction validates all three.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  static DensityMatrix from_pure(const StateVector& psi);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// tr(rho . obs) for Hermitian obs; the imaginary residue must stay below
/// 1e-10 and is discarded.
double expectation(const DensityMatrix& rho, const ComplexMatrix& obs);

StateVector basis_state(Eigen::Index dim, Eigen::Index index);

/// (|01> - |10>)/sqrt(2)
StateVector singlet_vector();
DensityMatrix singlet();

/// p . singlet + (1-p) . I/4; valid for p in [-1/3, 1].
DensityMatrix werner(double p);

DensityMatrix maximally_mixed(Eigen::Index dim);

}  // namespace chiralsim
