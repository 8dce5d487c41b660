#pragma once

#include <cstdint>
#include <optional>

#include "chiralsim/frame.hpp"
#include "chiralsim/states.hpp"

namespace chiralsim {

/// Shot count for sampled measurement; nullopt means exact expectations.
using Shots = std::optional<std::uint64_t>;

/// Minimum partial-transpose eigenvalue below which a state is called
/// entangled (numerical-noise floor; genuine negativity is orders of
/// magnitude larger).
inline constexpr double kNegativityThreshold = -1e-9;

/// Bloch vectors and correlation tensor measured by Alice and Bob, each
/// in their own axis labels. t(j, k) pairs Alice's label j with Bob's
/// label k. shots is empty for exact expectations.
struct CorrelationData {
  Vector3 a = Vector3::Zero();
  Vector3 b = Vector3::Zero();
  Matrix3 t = Matrix3::Zero();
  Shots shots;
};

/// Measures all single-side and joint Pauli correlations of a two-qubit
/// state (given in the global frame). "Alice measures sigma_j" means the
/// global observable along column j of her frame matrix. Sampled mode
/// draws `shots` (+-1, +-1) outcome pairs per (j,k) setting from the Born
/// distribution; a and b come from the same streams' marginals.
CorrelationData measure_correlations(const DensityMatrix& state, const Frame& alice,
                                     const Frame& bob, Shots shots, std::uint64_t seed);

/// The density-matrix formula applied to measured correlations:
/// 1/4 (I + a.sigma x I + b.I x sigma + t_jk sigma_j x sigma_k).
ComplexMatrix reconstruct(const CorrelationData& c);

/// What a mirrored-frame Bob reconstructs: the Bloch expansion of the
/// state with the I x sigma and sigma x sigma terms negated. Equal to
/// (I x sigma_y) PT_B(rho) (I x sigma_y).
ComplexMatrix mirrored_form(const DensityMatrix& state);

enum class PeresVerdict { Entangled, Separable };

double min_pt_eigenvalue(const DensityMatrix& state);

/// Partial-transpose test; exact (not heuristic) for two qubits.
PeresVerdict peres_verdict(const DensityMatrix& state);

}  // namespace chiralsim
