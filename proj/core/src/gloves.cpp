#include "chiralsim/gloves.hpp"

#include <cmath>

#include "chiralsim/chirality.hpp"

namespace chiralsim {

namespace {

void require_three_particle(const StateVector& psi, const char* who) {
  if (psi.dim() != kThreeParticleDim) {
    throw BadDimensionError(std::string(who) + ": expected a 64-dimensional state");
  }
}

// m values of the l=1 triplet in the order contracted by state_A
constexpr int kTripletM[3] = {+1, 0, -1};

}  // namespace

int orbital_index(int l, int m) {
  if (l == 0 && m == 0) return 0;
  if (l == 1 && m >= -1 && m <= 1) return 2 + m;
  throw BadDimensionError("orbital_index: label outside the (l=0,1) space");
}

OrbitalLabel orbital_label(int index) {
  if (index == 0) return {0, 0};
  if (index >= 1 && index <= 3) return {1, index - 2};
  throw BadDimensionError("orbital_label: index outside [0,4)");
}

ComplexMatrix parity_single() {
  ComplexMatrix p = ComplexMatrix::Zero(kOrbitalDim, kOrbitalDim);
  for (int i = 0; i < kOrbitalDim; ++i) {
    p(i, i) = (orbital_label(i).l % 2 == 0) ? 1.0 : -1.0;
  }
  return p;
}

int parity_sign_three(Eigen::Index index64) {
  int sign = 1;
  for (Eigen::Index rest = index64, p = 0; p < 3; ++p, rest /= kOrbitalDim) {
    if (orbital_label(static_cast<int>(rest % kOrbitalDim)).l % 2 != 0) sign = -sign;
  }
  return sign;
}

StateVector apply_parity_three(const StateVector& psi) {
  require_three_particle(psi, "apply_parity_three");
  ComplexVector out = psi.amplitudes();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) *= static_cast<double>(parity_sign_three(i));
  }
  return StateVector(std::move(out));
}

StateVector state_S() {
  ComplexVector v = ComplexVector::Zero(kThreeParticleDim);
  v(0) = 1.0;  // (l=0)x(l=0)x(l=0)
  return StateVector(std::move(v));
}

StateVector state_A() {
  ComplexVector v = ComplexVector::Zero(kThreeParticleDim);
  const double amp = 1.0 / std::sqrt(6.0);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const int eps = levi_civita(a, b, c);
        if (eps == 0) continue;
        const int i1 = orbital_index(1, kTripletM[a]);
        const int i2 = orbital_index(1, kTripletM[b]);
        const int i3 = orbital_index(1, kTripletM[c]);
        v(16 * i1 + 4 * i2 + i3) = eps * amp;
      }
    }
  }
  return StateVector(std::move(v));
}

GloveState glove(Handedness handedness) {
  const double s = handedness == Handedness::Plus ? 1.0 : -1.0;
  ComplexVector v =
      (state_S().amplitudes() + s * state_A().amplitudes()) / std::sqrt(2.0);
  return GloveState{StateVector(std::move(v)), handedness};
}

ComplexMatrix rotate_single(const Matrix3& r) {
  if ((r.transpose() * r - Matrix3::Identity()).cwiseAbs().maxCoeff() > kStructuralTol ||
      std::abs(r.determinant() - 1.0) > kStructuralTol) {
    throw NotRotationError("rotate_single: matrix is not in SO(3)");
  }
  // Wigner D^1 via the spherical basis: columns of T are the l=1 states
  // e_{-1} = (x - iy)/sqrt(2), e_0 = z, e_{+1} = -(x + iy)/sqrt(2)
  // expressed in Cartesian components (Condon-Shortley), so D^1 = T^dag r T.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  Eigen::Matrix3cd t;
  t << inv_sqrt2, 0, -inv_sqrt2,
       -i * inv_sqrt2, 0, -i * inv_sqrt2,
       0, 1, 0;
  const Eigen::Matrix3cd d1 = t.adjoint() * r.cast<Complex>() * t;

  ComplexMatrix u = ComplexMatrix::Zero(kOrbitalDim, kOrbitalDim);
  u(0, 0) = 1.0;
  u.block<3, 3>(1, 1) = d1;
  return u;
}

ComplexMatrix rotate_three(const Matrix3& r) {
  const ComplexMatrix u = rotate_single(r);
  return triple_kron(u, u, u);
}

GloveOverlaps glove_overlaps(const StateVector& state) {
  require_three_particle(state, "glove_overlaps");
  GloveOverlaps o;
  o.plus = std::norm(glove(Handedness::Plus).state.overlap(state));
  o.minus = std::norm(glove(Handedness::Minus).state.overlap(state));
  return o;
}

GloveVerdict discriminate_glove(const StateVector& state, bool receiver_parity_applied) {
  require_three_particle(state, "discriminate_glove");
  const StateVector received = receiver_parity_applied ? apply_parity_three(state) : state;
  const GloveOverlaps o = glove_overlaps(received);
  if (o.plus >= kGloveThreshold) return GloveVerdict::Plus;
  if (o.minus >= kGloveThreshold) return GloveVerdict::Minus;
  return GloveVerdict::Inconclusive;
}

}  // namespace chiralsim
