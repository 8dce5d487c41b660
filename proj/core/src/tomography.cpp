#include "chiralsim/tomography.hpp"

#include <array>

#include "chiralsim/rng.hpp"

namespace chiralsim {

namespace {

void require_two_qubit(const DensityMatrix& state, const char* who) {
  if (state.dim() != 4) {
    throw BadStateError(std::string(who) + ": expected a 4x4 two-qubit state");
  }
}

struct ExactCorrelations {
  Vector3 a = Vector3::Zero();
  Vector3 b = Vector3::Zero();
  Matrix3 t = Matrix3::Zero();
};

ExactCorrelations exact_correlations(const DensityMatrix& state, const Frame& alice,
                                     const Frame& bob) {
  ExactCorrelations e;
  std::array<ComplexMatrix, 3> alice_obs, bob_obs;
  for (int j = 0; j < 3; ++j) {
    alice_obs[j] = direction_observable(alice.axis_direction(j));
    bob_obs[j] = direction_observable(bob.axis_direction(j));
  }
  for (int j = 0; j < 3; ++j) {
    e.a(j) = expectation(state, kron(alice_obs[j], identity(2)));
    e.b(j) = expectation(state, kron(identity(2), bob_obs[j]));
    for (int k = 0; k < 3; ++k) {
      e.t(j, k) = expectation(state, kron(alice_obs[j], bob_obs[k]));
    }
  }
  return e;
}

}  // namespace

CorrelationData measure_correlations(const DensityMatrix& state, const Frame& alice,
                                     const Frame& bob, Shots shots, std::uint64_t seed) {
  require_two_qubit(state, "measure_correlations");
  const ExactCorrelations exact = exact_correlations(state, alice, bob);

  CorrelationData data;
  data.shots = shots;
  if (!shots.has_value()) {
    data.a = exact.a;
    data.b = exact.b;
    data.t = exact.t;
    return data;
  }
  if (*shots < 1) throw Error("measure_correlations: shots must be >= 1");

  const Rng base(seed);
  const double n = static_cast<double>(*shots);
  Matrix3 alice_marginal = Matrix3::Zero();  // per-setting mean of Alice's +-1 outcomes
  Matrix3 bob_marginal = Matrix3::Zero();

  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      // Born distribution of the joint projective measurement: outcomes
      // (alpha, beta) in {+1,-1}^2 with
      //   p = (1 + alpha <A> + beta <B> + alpha beta <AB>) / 4
      const double ea = exact.a(j), eb = exact.b(k), eab = exact.t(j, k);
      std::array<double, 4> p{};  // order: (+,+), (+,-), (-,+), (-,-)
      int idx = 0;
      for (int alpha : {+1, -1}) {
        for (int beta : {+1, -1}) {
          p[idx++] = std::max(0.0, 0.25 * (1.0 + alpha * ea + beta * eb + alpha * beta * eab));
        }
      }
      Rng stream = base.substream(static_cast<std::uint64_t>(3 * j + k));
      long long sum_a = 0, sum_b = 0, sum_ab = 0;
      for (std::uint64_t s = 0; s < *shots; ++s) {
        const std::size_t o = stream.discrete(p);
        const int alpha = (o < 2) ? +1 : -1;
        const int beta = (o % 2 == 0) ? +1 : -1;
        sum_a += alpha;
        sum_b += beta;
        sum_ab += alpha * beta;
      }
      data.t(j, k) = static_cast<double>(sum_ab) / n;
      alice_marginal(j, k) = static_cast<double>(sum_a) / n;
      bob_marginal(j, k) = static_cast<double>(sum_b) / n;
    }
  }
  // single-side expectations reuse the marginals of the three settings
  // sharing that label
  for (int j = 0; j < 3; ++j) data.a(j) = alice_marginal.row(j).mean();
  for (int k = 0; k < 3; ++k) data.b(k) = bob_marginal.col(k).mean();
  return data;
}

ComplexMatrix reconstruct(const CorrelationData& c) {
  ComplexMatrix rho = identity(4);
  for (int j = 0; j < 3; ++j) {
    rho += c.a(j) * kron(paulis()[j], identity(2));
    rho += c.b(j) * kron(identity(2), paulis()[j]);
    for (int k = 0; k < 3; ++k) {
      rho += c.t(j, k) * kron(paulis()[j], paulis()[k]);
    }
  }
  return 0.25 * rho;
}

ComplexMatrix mirrored_form(const DensityMatrix& state) {
  require_two_qubit(state, "mirrored_form");
  const ExactCorrelations e = exact_correlations(state, Frame::identity(), Frame::identity());
  CorrelationData flipped;
  flipped.a = e.a;
  flipped.b = -e.b;
  flipped.t = -e.t;
  return reconstruct(flipped);
}

double min_pt_eigenvalue(const DensityMatrix& state) {
  require_two_qubit(state, "min_pt_eigenvalue");
  return hermitian_eig(partial_transpose(state.matrix(), Subsystem::B)).eigenvalues.minCoeff();
}

PeresVerdict peres_verdict(const DensityMatrix& state) {
  return min_pt_eigenvalue(state) < kNegativityThreshold ? PeresVerdict::Entangled
                                                         : PeresVerdict::Separable;
}

}  // namespace chiralsim
