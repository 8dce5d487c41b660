#include "chiralsim/linalg.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/KroneckerProduct>

namespace chiralsim {

namespace {

const Complex kI{0.0, 1.0};

std::array<ComplexMatrix, 3> make_paulis() {
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -kI, kI, 0;
  sz << 1, 0, 0, -1;
  return {sx, sy, sz};
}

}  // namespace

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

const std::array<ComplexMatrix, 3>& paulis() {
  static const std::array<ComplexMatrix, 3> p = make_paulis();
  return p;
}

ComplexMatrix pauli(PauliAxis axis) { return paulis()[static_cast<int>(axis)]; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  return Eigen::kroneckerProduct(a, b);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  if (hermiticity_defect(m) > kStructuralTol) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  // SelfAdjointEigenSolver returns eigenvalues sorted ascending
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix rotation_unitary(const Vector3& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > kStructuralTol) {
    throw BadAxisError("rotation_unitary: axis must be unit length");
  }
  const double half = 0.5 * angle;
  ComplexMatrix n_sigma = axis.x() * pauli(PauliAxis::X) + axis.y() * pauli(PauliAxis::Y) +
                          axis.z() * pauli(PauliAxis::Z);
  return std::cos(half) * identity(2) - kI * std::sin(half) * n_sigma;
}

Matrix3 so3_from(const Vector3& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > kStructuralTol) {
    throw BadAxisError("so3_from: axis must be unit length");
  }
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Subsystem subsystem) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw BadDimensionError("partial_transpose: expected a 4x4 two-qubit operator");
  }
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          if (subsystem == Subsystem::B) {
            // (i j),(k l) <- (i l),(k j)
            out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
          } else {
            out(2 * i + j, 2 * k + l) = rho(2 * k + j, 2 * i + l);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace chiralsim
