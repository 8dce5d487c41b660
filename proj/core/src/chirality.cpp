#include "chiralsim/chirality.hpp"

#include <array>
#include <cmath>

#include "chiralsim/rng.hpp"

namespace chiralsim {

namespace {

void require_three_qubit(const DensityMatrix& state, const char* who) {
  if (state.dim() != 8) {
    throw BadStateError(std::string(who) + ": expected an 8x8 three-qubit state");
  }
}

}  // namespace

ComplexMatrix triple_kron(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

ChiralityOperator build_chi(const Frame& frame) {
  const Matrix3& m = frame.matrix();

  // eps'_jkl = sum_abc eps_abc M_aj M_bk M_cl
  double eps_prime[3][3][3] = {};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        double v = 0.0;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
              const int eps = levi_civita(a, b, c);
              if (eps != 0) v += eps * m(a, j) * m(b, k) * m(c, l);
            }
          }
        }
        eps_prime[j][k][l] = v;
      }
    }
  }

  const double norm = 1.0 / (2.0 * std::sqrt(3.0));
  ComplexMatrix chi = ComplexMatrix::Zero(8, 8);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        if (eps_prime[j][k][l] == 0.0) continue;
        chi += (norm * eps_prime[j][k][l]) *
               triple_kron(paulis()[j], paulis()[k], paulis()[l]);
      }
    }
  }

  const HermitianEigen eig = hermitian_eig(chi);
  ComplexMatrix proj_minus = ComplexMatrix::Zero(8, 8);
  ComplexMatrix proj_zero = ComplexMatrix::Zero(8, 8);
  ComplexMatrix proj_plus = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    const double lambda = eig.eigenvalues(i);
    const ComplexVector v = eig.eigenvectors.col(i);
    if (std::abs(lambda + 1.0) <= kChiClusterTol) {
      proj_minus += v * v.adjoint();
    } else if (std::abs(lambda) <= kChiClusterTol) {
      proj_zero += v * v.adjoint();
    } else if (std::abs(lambda - 1.0) <= kChiClusterTol) {
      proj_plus += v * v.adjoint();
    } else {
      throw Error("build_chi: eigenvalue outside the {-1,0,+1} clusters");
    }
  }

  return ChiralityOperator{std::move(chi), std::move(proj_plus), std::move(proj_zero),
                           std::move(proj_minus), frame};
}

ChiralityState rho_state(ChiralityLabel label) {
  const ChiralityOperator chi = build_chi(Frame::identity());
  const ComplexMatrix& proj = label == ChiralityLabel::Plus ? chi.proj_plus : chi.proj_minus;
  return ChiralityState{DensityMatrix(0.5 * proj), label};
}

ChiOutcomeDistribution measure_chi(const DensityMatrix& state, const Frame& bob) {
  require_three_qubit(state, "measure_chi");
  const ChiralityOperator chi = build_chi(bob);
  ChiOutcomeDistribution d;
  d.p_plus = std::max(0.0, expectation(state, chi.proj_plus));
  d.p_zero = std::max(0.0, expectation(state, chi.proj_zero));
  d.p_minus = std::max(0.0, expectation(state, chi.proj_minus));
  return d;
}

ChiOutcomeCounts sample_chi(const DensityMatrix& state, const Frame& bob, std::uint64_t shots,
                            std::uint64_t seed) {
  if (shots < 1) throw Error("sample_chi: shots must be >= 1");
  const ChiOutcomeDistribution d = measure_chi(state, bob);
  const std::array<double, 3> p{d.p_plus, d.p_zero, d.p_minus};
  Rng rng(seed);
  ChiOutcomeCounts counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    switch (rng.discrete(p)) {
      case 0: ++counts.plus; break;
      case 1: ++counts.zero; break;
      default: ++counts.minus; break;
    }
  }
  return counts;
}

double rotation_invariance_deviation(const DensityMatrix& state, const Vector3& axis,
                                     double angle) {
  require_three_qubit(state, "rotation_invariance_deviation");
  const ComplexMatrix u = rotation_unitary(axis, angle);
  const ComplexMatrix u3 = triple_kron(u, u, u);
  return (u3 * state.matrix() * u3.adjoint() - state.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace chiralsim
