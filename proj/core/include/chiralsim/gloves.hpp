#pragma once

#include "chiralsim/states.hpp"

namespace chiralsim {

/// Single-particle orbital space: the l=0 state plus the three l=1
/// states, ordered (l=0,m=0), (l=1,m=-1), (l=1,m=0), (l=1,m=+1).
inline constexpr int kOrbitalDim = 4;
inline constexpr int kThreeParticleDim = kOrbitalDim * kOrbitalDim * kOrbitalDim;  // 64

struct OrbitalLabel {
  int l;
  int m;
};

int orbital_index(int l, int m);
OrbitalLabel orbital_label(int index);

/// Glove discrimination calls a state conclusive only when its overlap
/// with one glove is within 1e-9 of 1.
inline constexpr double kGloveThreshold = 1.0 - 1e-9;

enum class Handedness { Plus, Minus };
enum class GloveVerdict { Plus, Minus, Inconclusive };

inline Handedness opposite(Handedness h) {
  return h == Handedness::Plus ? Handedness::Minus : Handedness::Plus;
}

/// Spatial reflection about the origin on one particle:
/// Y^l_m -> (-1)^l Y^l_m, i.e. diag(+1, -1, -1, -1).
ComplexMatrix parity_single();

/// Sign of P x P x P on a three-particle product basis state.
int parity_sign_three(Eigen::Index index64);

/// P x P x P applied to a 64-dimensional state (diagonal, sign lookup).
StateVector apply_parity_three(const StateVector& psi);

/// The symmetric product state (l=0)^x3.
StateVector state_S();

/// The antisymmetric combination of the three l=1 orbitals,
/// 1/sqrt(6) sum_abc eps_abc |m_a m_b m_c> with (m_1,m_2,m_3)=(+1,0,-1).
StateVector state_A();

/// Quantum glove |G+-> = (|S> +- |A>)/sqrt(2): rotation invariant,
/// swapped by parity, so it carries chirality and nothing else.
struct GloveState {
  StateVector state;
  Handedness handedness;
};

GloveState glove(Handedness handedness);

/// Single-particle rotation: 1 on the l=0 slot, the Wigner D^1 matrix on
/// the l=1 block. Requires r in SO(3).
ComplexMatrix rotate_single(const Matrix3& r);

/// rotate_single(r) on all three particles (64x64).
ComplexMatrix rotate_three(const Matrix3& r);

/// Projects onto the two gloves; conclusive only above kGloveThreshold.
/// If receiver_parity_applied, the incoming state is first reflected
/// through P x P x P (a receiver of opposite chirality).
GloveVerdict discriminate_glove(const StateVector& state, bool receiver_parity_applied);

/// Overlap probabilities |<G+-|psi>|^2 used by the discrimination.
struct GloveOverlaps {
  double plus = 0;
  double minus = 0;
};

GloveOverlaps glove_overlaps(const StateVector& state);

}  // namespace chiralsim
