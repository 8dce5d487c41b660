#pragma once

#include "chiralsim/linalg.hpp"

namespace chiralsim {

/// A lab reference frame: an O(3) matrix mapping the lab's axis labels
/// into the global axes. Column j is the global direction this lab calls
/// axis j. The determinant (+1 or -1) is the frame's chirality.
class Frame {
 public:
  explicit Frame(Matrix3 matrix);

  static Frame identity();
  static Frame mirror();  // all axes inverted: -I3
  static Frame rotation(const Vector3& axis, double angle);

  const Matrix3& matrix() const { return matrix_; }
  double chirality() const { return chirality_; }

  /// Global direction of this lab's axis `label` (0=x, 1=y, 2=z).
  Vector3 axis_direction(int label) const { return matrix_.col(label); }

 private:
  Matrix3 matrix_;
  double chirality_;
};

/// (n . sigma) for a unit direction n.
ComplexMatrix direction_observable(const Vector3& n);

}  // namespace chiralsim
