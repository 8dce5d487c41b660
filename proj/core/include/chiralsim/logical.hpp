#pragma once

#include "chiralsim/gloves.hpp"
#include "chiralsim/states.hpp"

namespace chiralsim {

/// Nine-orbital physical space carrying three logical qubits: 64^3.
inline constexpr Eigen::Index kPhysicalDim =
    static_cast<Eigen::Index>(kThreeParticleDim) * kThreeParticleDim * kThreeParticleDim;

/// A qubit on the ordered logical basis (|S>, |A>).
struct LogicalQubit {
  LogicalQubit(Complex c0, Complex c1);
  Complex c0;
  Complex c1;
};

/// Three logical qubits: 8 amplitudes over {S,A}^3, unit norm.
class LogicalRegister3 {
 public:
  explicit LogicalRegister3(ComplexVector amplitudes);
  const ComplexVector& amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// c0|S> + c1|A> in the 64-dimensional three-particle space.
StateVector encode(const LogicalQubit& q);

/// Spatial reflection acts on logical amplitudes as a phase flip:
/// (c0, c1) -> (c0, -c1).
LogicalQubit parity_on_logical(const LogicalQubit& q);

/// Logical phase flip (diag(1,-1) on (|S>, |A>)).
ComplexMatrix logical_phase_flip();

/// Isometry from the 8-dimensional logical space into the 64^3 physical
/// space, applied columnwise: |b1 b2 b3> -> |phi_b1 phi_b2 phi_b3> with
/// phi_0 = |S>, phi_1 = |A>.
StateVector embed(const LogicalRegister3& reg);

/// V^dag V of the embedding isometry; identity when the columns are
/// orthonormal.
ComplexMatrix embedding_gram();

/// P applied to all nine orbitals, matrix-free: a per-index sign flip on
/// the 64^3 amplitudes. Involution, norm preserving.
StateVector apply_physical_parity(const StateVector& v);

/// max |(Z x Z x Z) chi (Z x Z x Z) - chi| on the 8x8 logical
/// representation: the logical-space form of invariance of chi under
/// spatial reflection of all particles.
double logical_chi_invariance_check();

/// max |U chi U^dag - chi| for an arbitrary 8x8 conjugation.
double chi_conjugation_deviation(const ComplexMatrix& u);

}  // namespace chiralsim
