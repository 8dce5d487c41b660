#include <cmath>
#include <numbers>

#include "chiralsim/states.hpp"
#include "test_helpers.hpp"

using namespace chiralsim;
using namespace chiralsim::testing;

namespace {

const Complex I{0.0, 1.0};

// the chirality operator written out term by term, independent of build_chi
ComplexMatrix chi_by_hand() {
  const ComplexMatrix sx = pauli(PauliAxis::X);
  const ComplexMatrix sy = pauli(PauliAxis::Y);
  const ComplexMatrix sz = pauli(PauliAxis::Z);
  const double c = 1.0 / (2.0 * std::sqrt(3.0));
  return c * (kron(kron(sx, sy), sz) + kron(kron(sy, sz), sx) + kron(kron(sz, sx), sy) -
              kron(kron(sx, sz), sy) - kron(kron(sz, sy), sx) - kron(kron(sy, sx), sz));
}

}  // namespace

TEST_CASE("pauli matrices satisfy the standard algebra") {
  CHECK(max_diff(pauli(PauliAxis::Z), (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished()) == 0.0);
  for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    const ComplexMatrix s = pauli(axis);
    CHECK(max_diff(s, s.adjoint()) == 0.0);             // Hermitian
    CHECK(std::abs(s.trace()) == 0.0);                  // traceless
    CHECK(max_diff(s * s, identity(2)) == 0.0);         // involution
  }
  const ComplexMatrix comm = pauli(PauliAxis::X) * pauli(PauliAxis::Y) -
                             pauli(PauliAxis::Y) * pauli(PauliAxis::X);
  CHECK(max_diff(comm, 2.0 * I * pauli(PauliAxis::Z)) == 0.0);
}

TEST_CASE("kron dimensions, identity case, and definition") {
  CHECK(max_diff(kron(identity(2), identity(2)), identity(4)) == 0.0);

  // bit flip on both factors maps |00> to |11>
  ComplexVector v00 = ComplexVector::Zero(4);
  v00(0) = 1.0;
  const ComplexVector flipped = kron(pauli(PauliAxis::X), pauli(PauliAxis::X)) * v00;
  ComplexVector v11 = ComplexVector::Zero(4);
  v11(3) = 1.0;
  CHECK(max_diff(flipped, v11) == 0.0);

  Rng rng(11);
  const ComplexMatrix a = random_complex(2, 2, rng);
  const ComplexMatrix b = random_complex(2, 2, rng);
  const ComplexMatrix ab = kron(a, b);
  CHECK(ab.rows() == 4);
  CHECK(std::abs(ab(0, 3) - a(0, 1) * b(0, 1)) == 0.0);
}

TEST_CASE("kron mixed-product and associativity properties") {
  Rng rng(12);
  for (int n = 0; n < 20; ++n) {
    const ComplexMatrix a = random_complex(2, 2, rng);
    const ComplexMatrix b = random_complex(2, 2, rng);
    const ComplexMatrix c = random_complex(2, 2, rng);
    const ComplexMatrix d = random_complex(2, 2, rng);
    CHECK(max_diff(kron(a, b) * kron(c, d), kron((a * c).eval(), (b * d).eval())) < 1e-12);
    CHECK(max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("hermitian_eig on fixed spectra") {
  const HermitianEigen ez = hermitian_eig(pauli(PauliAxis::Z));
  CHECK(ez.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ez.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));

  const HermitianEigen es = hermitian_eig(singlet().matrix());
  for (int i = 0; i < 3; ++i) CHECK(std::abs(es.eigenvalues(i)) < 1e-12);
  CHECK(es.eigenvalues(3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig resolves the chirality operator spectrum") {
  // oracle: brute-force eigensolve of the hand-built 8x8 operator,
  // cross-checked against tr = 0 and tr^2 = 4
  const ComplexMatrix chi = chi_by_hand();
  CHECK(std::abs(chi.trace()) < 1e-14);
  CHECK(std::abs((chi * chi).trace().real() - 4.0) < 1e-12);

  const HermitianEigen eig = hermitian_eig(chi);
  const double expected[8] = {-1, -1, 0, 0, 0, 0, 1, 1};
  for (int i = 0; i < 8; ++i) {
    CHECK(eig.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eig invariants on random Hermitian input") {
  Rng rng(13);
  for (Eigen::Index dim : {2, 4, 8, 16}) {
    const ComplexMatrix h = random_hermitian(dim, rng);
    const HermitianEigen eig = hermitian_eig(h);
    for (Eigen::Index i = 0; i + 1 < dim; ++i) {
      CHECK(eig.eigenvalues(i) <= eig.eigenvalues(i + 1));
    }
    const ComplexMatrix recon = eig.eigenvectors *
                                eig.eigenvalues.cast<Complex>().asDiagonal() *
                                eig.eigenvectors.adjoint();
    CHECK((h - recon).norm() <= kEigenResidualTol * std::max(1.0, h.norm()));
    CHECK(max_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, identity(dim)) < 1e-9);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m << 0, 1, 2, 0;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitianError);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), NotHermitianError);
}

TEST_CASE("rotation_unitary closed forms") {
  const Vector3 z(0, 0, 1);
  CHECK(max_diff(rotation_unitary(z, 0.0), identity(2)) == 0.0);
  CHECK(max_diff(rotation_unitary(z, std::numbers::pi), -I * pauli(PauliAxis::Z)) < 1e-15);

  const ComplexMatrix u = rotation_unitary(Vector3(1, 0, 0), 0.3);
  CHECK(max_diff(u * u.adjoint(), identity(2)) < 1e-15);
  CHECK(std::abs(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0) - Complex{1.0, 0.0}) < 1e-15);

  CHECK_THROWS_AS(rotation_unitary(Vector3(1, 1, 0), 0.5), BadAxisError);
}

TEST_CASE("rotation_unitary conjugation matches the so3 rotation") {
  Rng rng(14);
  for (int n = 0; n < 20; ++n) {
    const Vector3 axis = random_axis(rng);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const ComplexMatrix u = rotation_unitary(axis, angle);
    const Matrix3 r = so3_from(axis, angle);
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix rotated = ComplexMatrix::Zero(2, 2);
      for (int k = 0; k < 3; ++k) rotated += r(k, j) * paulis()[k];
      CHECK(max_diff(u * paulis()[j] * u.adjoint(), rotated) < 1e-10);
    }
  }
}

TEST_CASE("so3_from basics and group law on a fixed axis") {
  const Vector3 z(0, 0, 1);
  const Matrix3 r = so3_from(z, std::numbers::pi / 2.0);
  CHECK((r * Vector3(1, 0, 0) - Vector3(0, 1, 0)).norm() < 1e-15);
  CHECK((so3_from(z, 0.0) - Matrix3::Identity()).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(15);
  for (int n = 0; n < 20; ++n) {
    const Vector3 axis = random_axis(rng);
    const double a = rng.uniform(0.0, 3.0), b = rng.uniform(0.0, 3.0);
    const Matrix3 lhs = so3_from(axis, a) * so3_from(axis, b);
    CHECK((lhs - so3_from(axis, a + b)).cwiseAbs().maxCoeff() < 1e-12);
    const Matrix3 m = so3_from(axis, a);
    CHECK((m.transpose() * m - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(m.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(so3_from(Vector3(0, 0, 2), 1.0), BadAxisError);
}

TEST_CASE("partial transpose on fixed inputs") {
  CHECK(max_diff(partial_transpose(0.25 * identity(4), Subsystem::B), 0.25 * identity(4)) ==
        0.0);

  // on a product state only the chosen factor is transposed
  Rng rng(16);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(2, rng);
  CHECK(max_diff(partial_transpose(kron(a, b), Subsystem::B), kron(a, b.transpose().eval())) <
        1e-15);
  CHECK(max_diff(partial_transpose(kron(a, b), Subsystem::A), kron(a.transpose().eval(), b)) <
        1e-15);

  CHECK_THROWS_AS(partial_transpose(identity(8), Subsystem::A), BadDimensionError);
}

TEST_CASE("partial transpose of the singlet has eigenvalues (-1/2, 1/2, 1/2, 1/2)") {
  // oracle: brute-force eigensolve of the partially transposed projector
  const HermitianEigen eig =
      hermitian_eig(partial_transpose(singlet().matrix(), Subsystem::B));
  CHECK(eig.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) {
    CHECK(eig.eigenvalues(i) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("partial transpose is an involution preserving trace and Hermiticity") {
  Rng rng(17);
  for (int n = 0; n < 100; ++n) {
    const ComplexMatrix h = random_hermitian(4, rng);
    for (Subsystem s : {Subsystem::A, Subsystem::B}) {
      const ComplexMatrix pt = partial_transpose(h, s);
      CHECK(max_diff(partial_transpose(pt, s), h) == 0.0);
      CHECK(std::abs(pt.trace() - h.trace()) == 0.0);
      CHECK(hermiticity_defect(pt) < 1e-15);
    }
  }
}

TEST_CASE("expectation values on fixed states") {
  CHECK(std::abs(expectation(maximally_mixed(4), kron(pauli(PauliAxis::Z), identity(2)))) <
        1e-15);

  // the singlet is perfectly anticorrelated along every axis
  for (int j = 0; j < 3; ++j) {
    CHECK(expectation(singlet(), kron(paulis()[j], paulis()[j])) ==
          doctest::Approx(-1.0).epsilon(1e-12));
  }

  ComplexMatrix up = ComplexMatrix::Zero(2, 2);
  up(0, 0) = 1.0;
  CHECK(expectation(DensityMatrix(up), pauli(PauliAxis::Z)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation rejects bad observables") {
  CHECK_THROWS_AS(expectation(singlet(), identity(2)), DimensionMismatchError);
  ComplexMatrix m(4, 4);
  m.setZero();
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(expectation(singlet(), m), NotHermitianError);
}

TEST_CASE("state vector and density matrix construction validate invariants") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(StateVector(v), NotNormalizedError);

  ComplexMatrix not_herm(2, 2);
  not_herm << 0.5, 0.5, -0.5, 0.5;
  CHECK_THROWS_AS(DensityMatrix(not_herm), BadStateError);

  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(identity(2))), BadStateError);  // trace 2

  ComplexMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix(neg), BadStateError);

  CHECK(singlet().dim() == 4);
  CHECK(werner(0.5).dim() == 4);
  CHECK_THROWS_AS(werner(2.0), BadStateError);
}
