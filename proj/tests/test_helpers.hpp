#pragma once

#include <doctest.h>

#include "chiralsim/linalg.hpp"
#include "chiralsim/rng.hpp"

namespace chiralsim::testing {

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const ComplexVector& a, const ComplexVector& b) {
  REQUIRE(a.size() == b.size());
  return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  }
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_complex(dim, dim, rng);
  return 0.5 * (g + g.adjoint().eval());
}

inline Vector3 random_axis(Rng& rng) {
  Vector3 n(rng.normal(), rng.normal(), rng.normal());
  while (n.norm() < 1e-6) n = Vector3(rng.normal(), rng.normal(), rng.normal());
  return n.normalized();
}

}  // namespace chiralsim::testing
