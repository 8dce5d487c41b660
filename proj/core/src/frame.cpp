#include "chiralsim/frame.hpp"

#include <cmath>

namespace chiralsim {

Frame::Frame(Matrix3 matrix) : matrix_(std::move(matrix)) {
  const double ortho_defect = (matrix_.transpose() * matrix_ - Matrix3::Identity()).cwiseAbs().maxCoeff();
  if (ortho_defect > kStructuralTol) {
    throw NotRotationError("Frame: matrix is not orthogonal within tolerance");
  }
  const double det = matrix_.determinant();
  if (std::abs(std::abs(det) - 1.0) > kStructuralTol) {
    throw NotRotationError("Frame: determinant is not +-1");
  }
  chirality_ = det > 0 ? 1.0 : -1.0;
}

Frame Frame::identity() { return Frame(Matrix3::Identity()); }

Frame Frame::mirror() { return Frame(-Matrix3::Identity()); }

Frame Frame::rotation(const Vector3& axis, double angle) {
  return Frame(so3_from(axis, angle));
}

ComplexMatrix direction_observable(const Vector3& n) {
  return n.x() * pauli(PauliAxis::X) + n.y() * pauli(PauliAxis::Y) + n.z() * pauli(PauliAxis::Z);
}

}  // namespace chiralsim
