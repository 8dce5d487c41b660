#include <cmath>
#include <numbers>

#include "chiralsim/random_states.hpp"
#include "chiralsim/tomography.hpp"
#include "test_helpers.hpp"

using namespace chiralsim;
using namespace chiralsim::testing;

TEST_CASE("frames validate orthogonality and expose chirality") {
  CHECK(Frame::identity().chirality() == 1.0);
  CHECK(Frame::mirror().chirality() == -1.0);
  CHECK(Frame::rotation(Vector3(0, 1, 0), 1.2).chirality() == 1.0);

  Matrix3 skew;
  skew << 1, 0.1, 0, 0, 1, 0, 0, 0, 1;
  CHECK_THROWS_AS(Frame(skew), NotRotationError);
}

TEST_CASE("exact correlations of the singlet") {
  const CorrelationData c = measure_correlations(singlet(), Frame::identity(),
                                                 Frame::identity(), std::nullopt, 0);
  CHECK(c.a.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(c.b.cwiseAbs().maxCoeff() < 1e-12);
  CHECK((c.t + Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(!c.shots.has_value());
}

TEST_CASE("mirroring Bob's axes negates his correlation columns") {
  const CorrelationData c = measure_correlations(singlet(), Frame::identity(),
                                                 Frame::mirror(), std::nullopt, 0);
  CHECK((c.t - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the maximally mixed state carries no correlations") {
  Rng rng(21);
  const Frame fa(random_orthogonal(rng, +1));
  const Frame fb(random_orthogonal(rng, -1));
  const CorrelationData c =
      measure_correlations(maximally_mixed(4), fa, fb, std::nullopt, 0);
  CHECK(c.a.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(c.b.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(c.t.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reconstruction returns the singlet projector for matched frames") {
  const CorrelationData c = measure_correlations(singlet(), Frame::identity(),
                                                 Frame::identity(), std::nullopt, 0);
  const ComplexMatrix recon = reconstruct(c);
  CHECK((recon - singlet().matrix()).norm() < 1e-10);

  CorrelationData zero;
  CHECK(max_diff(reconstruct(zero), 0.25 * identity(4)) == 0.0);
}

TEST_CASE("mirrored-frame reconstruction of the singlet is negative") {
  // oracle: eigensolve of the explicitly built 1/4 (I + sum sigma_j x sigma_j)
  ComplexMatrix expected = identity(4);
  for (int j = 0; j < 3; ++j) expected += kron(paulis()[j], paulis()[j]);
  expected *= 0.25;
  const double oracle_min = hermitian_eig(expected).eigenvalues.minCoeff();
  CHECK(oracle_min == doctest::Approx(-0.5).epsilon(1e-12));

  const ComplexMatrix recon = reconstruct(measure_correlations(
      singlet(), Frame::identity(), Frame::mirror(), std::nullopt, 0));
  CHECK(max_diff(recon, expected) < 1e-12);
  CHECK(hermitian_eig(recon).eigenvalues.minCoeff() == doctest::Approx(-0.5).epsilon(1e-9));

  CHECK(hermitian_eig(mirrored_form(singlet())).eigenvalues.minCoeff() ==
        doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(max_diff(mirrored_form(maximally_mixed(4)), 0.25 * identity(4)) < 1e-15);
}

TEST_CASE("mirrored form equals the sigma_y-conjugated partial transpose") {
  Rng rng(22);
  const ComplexMatrix sy = kron(identity(2), pauli(PauliAxis::Y));
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_density_matrix(4, rng);
    const ComplexMatrix oracle = sy * partial_transpose(rho.matrix(), Subsystem::B) * sy;
    CHECK(max_diff(mirrored_form(rho), oracle) < 1e-10);
  }
}

TEST_CASE("mirrored frame measurement reproduces the mirrored form") {
  Rng rng(23);
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_density_matrix(4, rng);
    const ComplexMatrix recon = reconstruct(
        measure_correlations(rho, Frame::identity(), Frame::mirror(), std::nullopt, 0));
    CHECK(max_diff(recon, mirrored_form(rho)) < 1e-10);
  }
}

TEST_CASE("round trip through a rotated frame conjugates the state") {
  Rng rng(24);
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_density_matrix(4, rng);
    const Vector3 axis = random_axis(rng);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Frame f = Frame::rotation(axis, angle);
    const ComplexMatrix recon =
        reconstruct(measure_correlations(rho, f, f, std::nullopt, 0));
    const ComplexMatrix u = rotation_unitary(axis, angle).adjoint();
    const ComplexMatrix w = kron(u, u);
    CHECK((recon - w * rho.matrix() * w.adjoint()).norm() < 1e-10);
  }

  // identity frame is the exact round trip
  Rng rng2(25);
  const DensityMatrix rho = random_density_matrix(4, rng2);
  const ComplexMatrix recon = reconstruct(
      measure_correlations(rho, Frame::identity(), Frame::identity(), std::nullopt, 0));
  CHECK((recon - rho.matrix()).norm() < 1e-10);
}

TEST_CASE("same-chirality frames preserve positivity") {
  Rng rng(26);
  for (int n = 0; n < 50; ++n) {
    const DensityMatrix rho = random_density_matrix(4, rng);
    const Frame fa(random_orthogonal(rng, +1));
    const Frame fb(random_orthogonal(rng, +1));
    const ComplexMatrix recon = reconstruct(measure_correlations(rho, fa, fb, std::nullopt, 0));
    CHECK(hermitian_eig(recon).eigenvalues.minCoeff() >= -1e-9);
  }
}

TEST_CASE("peres verdict on fixed families") {
  CHECK(peres_verdict(singlet()) == PeresVerdict::Entangled);

  Rng rng(27);
  const ComplexVector a = random_pure_state(2, rng).amplitudes();
  const ComplexVector b = random_pure_state(2, rng).amplitudes();
  const ComplexVector ab = kron(a, b);
  CHECK(peres_verdict(DensityMatrix(ab * ab.adjoint())) == PeresVerdict::Separable);

  // Werner family: entangled exactly above p = 1/3; the minimum partial
  // transpose eigenvalue has the closed form (1 - 3p)/4
  const double third = 1.0 / 3.0;
  CHECK(peres_verdict(werner(0.2)) == PeresVerdict::Separable);
  CHECK(peres_verdict(werner(third - 0.01)) == PeresVerdict::Separable);
  CHECK(peres_verdict(werner(third + 0.01)) == PeresVerdict::Entangled);
  CHECK(peres_verdict(werner(0.8)) == PeresVerdict::Entangled);
  for (double p : {0.2, third - 0.01, third + 0.01, 0.8}) {
    CHECK(min_pt_eigenvalue(werner(p)) ==
          doctest::Approx((1.0 - 3.0 * p) / 4.0).epsilon(1e-10));
  }
}

TEST_CASE("peres verdict is exact on random pure entangled and separable states") {
  Rng rng(28);
  for (int n = 0; n < 200; ++n) {
    const StateVector psi = random_pure_entangled(rng, 0.05);
    CHECK(peres_verdict(DensityMatrix::from_pure(psi)) == PeresVerdict::Entangled);
  }
  for (int n = 0; n < 200; ++n) {
    CHECK(peres_verdict(random_separable(rng, 10)) == PeresVerdict::Separable);
  }
}

TEST_CASE("sampled correlations stay in range and converge") {
  const std::uint64_t shots = 100000;
  const CorrelationData sampled = measure_correlations(
      singlet(), Frame::identity(), Frame::identity(), shots, 7);
  const CorrelationData exact = measure_correlations(
      singlet(), Frame::identity(), Frame::identity(), std::nullopt, 0);

  CHECK(sampled.shots.has_value());
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(sampled.a(j)) <= 1.0);
    CHECK(std::abs(sampled.b(j)) <= 1.0);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(sampled.t(j, k)) <= 1.0);
  }

  CHECK((sampled.t - exact.t).cwiseAbs().maxCoeff() < 0.02);
  CHECK((sampled.a - exact.a).cwiseAbs().maxCoeff() < 0.02);
  CHECK((sampled.b - exact.b).cwiseAbs().maxCoeff() < 0.02);
}

TEST_CASE("sampled correlations are deterministic in the seed") {
  const DensityMatrix w = werner(0.6);
  const Frame f = Frame::rotation(Vector3(1, 0, 0), 0.4);
  const CorrelationData c1 = measure_correlations(w, f, Frame::identity(), 2000, 99);
  const CorrelationData c2 = measure_correlations(w, f, Frame::identity(), 2000, 99);
  CHECK((c1.t - c2.t).cwiseAbs().maxCoeff() == 0.0);
  CHECK((c1.a - c2.a).cwiseAbs().maxCoeff() == 0.0);
  CHECK((c1.b - c2.b).cwiseAbs().maxCoeff() == 0.0);

  const CorrelationData c3 = measure_correlations(w, f, Frame::identity(), 2000, 100);
  CHECK((c1.t - c3.t).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("measurement rejects invalid input") {
  CHECK_THROWS_AS(measure_correlations(maximally_mixed(2), Frame::identity(),
                                       Frame::identity(), std::nullopt, 0),
                  BadStateError);
  CHECK_THROWS_AS(measure_correlations(singlet(), Frame::identity(), Frame::identity(),
                                       Shots{0}, 0),
                  Error);
  CHECK_THROWS_AS(mirrored_form(maximally_mixed(8)), BadStateError);
  CHECK_THROWS_AS(peres_verdict(maximally_mixed(2)), BadStateError);
}
