#pragma once

#include "chiralsim/rng.hpp"
#include "chiralsim/states.hpp"

namespace chiralsim {

/// Haar-distributed unitary (Ginibre + QR with phase fix).
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng);

StateVector random_pure_state(Eigen::Index dim, Rng& rng);

/// Full-rank random density matrix, G G^dag / tr(G G^dag).
DensityMatrix random_density_matrix(Eigen::Index dim, Rng& rng);

/// Uniform-axis, uniform-angle rotation matrix.
Matrix3 random_rotation(Rng& rng);

/// Random element of O(3) with the requested determinant sign.
Matrix3 random_orthogonal(Rng& rng, int det_sign);

/// Random two-qubit pure state, resampled until the smaller Schmidt
/// coefficient is at least `min_schmidt` (entangled by construction).
StateVector random_pure_entangled(Rng& rng, double min_schmidt);

/// Random mixture of `terms` pure product states with random weights
/// (separable by construction).
DensityMatrix random_separable(Rng& rng, int terms);

}  // namespace chiralsim
