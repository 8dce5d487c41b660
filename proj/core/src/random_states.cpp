#include "chiralsim/random_states.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace chiralsim {

namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  return g;
}

Vector3 random_unit_axis(Rng& rng) {
  Vector3 n(rng.normal(), rng.normal(), rng.normal());
  while (n.norm() < 1e-6) n = Vector3(rng.normal(), rng.normal(), rng.normal());
  return n.normalized();
}

}  // namespace

ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the column phases so the distribution is Haar
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

StateVector random_pure_state(Eigen::Index dim, Rng& rng) {
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v.normalize();
  return StateVector(std::move(v));
}

DensityMatrix random_density_matrix(Eigen::Index dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, dim, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint().eval());  // scrub roundoff asymmetry
  return DensityMatrix(std::move(m));
}

Matrix3 random_rotation(Rng& rng) {
  return so3_from(random_unit_axis(rng), rng.uniform(0.0, 2.0 * std::numbers::pi));
}

Matrix3 random_orthogonal(Rng& rng, int det_sign) {
  Matrix3 m = random_rotation(rng);
  if (det_sign < 0) m = -m;  // -R has determinant -1 in odd dimension
  return m;
}

StateVector random_pure_entangled(Rng& rng, double min_schmidt) {
  for (;;) {
    StateVector psi = random_pure_state(4, rng);
    // Schmidt coefficients = singular values of the 2x2 amplitude matrix
    Eigen::Matrix2cd amp;
    amp << psi.amplitude(0), psi.amplitude(1), psi.amplitude(2), psi.amplitude(3);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(amp);
    if (svd.singularValues().minCoeff() >= min_schmidt) return psi;
  }
}

DensityMatrix random_separable(Rng& rng, int terms) {
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.uniform();
    total += w;
  }
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (int t = 0; t < terms; ++t) {
    const ComplexVector a = random_pure_state(2, rng).amplitudes();
    const ComplexVector b = random_pure_state(2, rng).amplitudes();
    const ComplexVector ab = kron(a, b);
    rho += (weights[t] / total) * (ab * ab.adjoint());
  }
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

}  // namespace chiralsim
