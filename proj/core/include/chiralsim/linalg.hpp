#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "chiralsim/errors.hpp"

namespace chiralsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

// structural checks (Hermiticity, unitarity, norm)
inline constexpr double kStructuralTol = 1e-10;
// eigen-reconstruction residual, relative to max(1, ||M||_F)
inline constexpr double kEigenResidualTol = 1e-9;

enum class PauliAxis { X, Y, Z };
enum class Subsystem { A, B };

/// Levi-Civita symbol on indices {0,1,2}.
constexpr int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // even permutations of (0,1,2)
  if ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0)) return 1;
  return -1;
}

ComplexMatrix identity(Eigen::Index dim);

/// The 2x2 Pauli matrix for the given axis.
ComplexMatrix pauli(PauliAxis axis);

/// All three Pauli matrices, ordered (x, y, z).
const std::array<ComplexMatrix, 3>& paulis();

/// Kronecker (tensor) product, factor `a` leftmost.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors orthonormal in the columns. Degenerate eigenspaces come
/// with an arbitrary orthonormal basis; compare projectors, not vectors.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

double hermiticity_defect(const ComplexMatrix& m);

HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// SU(2) rotation exp(-i angle/2 axis.sigma); axis must be unit length.
ComplexMatrix rotation_unitary(const Vector3& axis, double angle);

/// SO(3) rotation about `axis` by `angle` (Rodrigues form).
Matrix3 so3_from(const Vector3& axis, double angle);

/// Transpose of one qubit factor of a two-qubit (4x4) operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem subsystem);

}  // namespace chiralsim
