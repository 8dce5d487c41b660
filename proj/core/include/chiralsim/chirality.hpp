#pragma once

#include <cstdint>

#include "chiralsim/frame.hpp"
#include "chiralsim/states.hpp"

namespace chiralsim {

/// Eigenvalues of the chirality operator are assigned to the clusters
/// {-1, 0, +1} within this tolerance.
inline constexpr double kChiClusterTol = 1e-6;

enum class ChiralityLabel { Plus, Minus };

inline int sign_of(ChiralityLabel label) { return label == ChiralityLabel::Plus ? +1 : -1; }

/// The three-qubit chirality operator in a given frame,
///   chi(F) = 1/(2 sqrt(3)) sum_jkl eps'_jkl sigma_j x sigma_k x sigma_l,
/// where eps' is the Levi-Civita tensor with all indices mapped through
/// the frame matrix, so chi(F) = det(M) chi(identity). proj_* are the
/// orthogonal spectral projectors onto the -1/0/+1 eigenspaces
/// (ranks 2, 4, 2); chi = proj_plus - proj_minus.
struct ChiralityOperator {
  ComplexMatrix matrix;
  ComplexMatrix proj_plus;
  ComplexMatrix proj_zero;
  ComplexMatrix proj_minus;
  Frame frame;
};

ChiralityOperator build_chi(const Frame& frame);

/// rho_+ = chi_+/2 or rho_- = chi_-/2 for the identity frame: the
/// maximally mixed state on the +-1 eigenspace.
struct ChiralityState {
  DensityMatrix rho;
  ChiralityLabel label;
};

ChiralityState rho_state(ChiralityLabel label);

struct ChiOutcomeDistribution {
  double p_plus = 0;
  double p_zero = 0;
  double p_minus = 0;
};

struct ChiOutcomeCounts {
  std::uint64_t plus = 0;
  std::uint64_t zero = 0;
  std::uint64_t minus = 0;
};

/// Born probabilities of measuring chi in Bob's frame on an 8x8 state.
ChiOutcomeDistribution measure_chi(const DensityMatrix& state, const Frame& bob);

/// `shots` outcomes drawn from the exact distribution.
ChiOutcomeCounts sample_chi(const DensityMatrix& state, const Frame& bob, std::uint64_t shots,
                            std::uint64_t seed);

/// max |U^x3 rho U^x3^dag - rho| for the single-qubit rotation
/// U = exp(-i angle/2 axis.sigma). Zero for collectively rotation
/// invariant states.
double rotation_invariance_deviation(const DensityMatrix& state, const Vector3& axis,
                                     double angle);

ComplexMatrix triple_kron(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

}  // namespace chiralsim
