#include "chiralsim/logical.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "chiralsim/chirality.hpp"

namespace chiralsim {

namespace {

using SparseEntry = std::pair<Eigen::Index, Complex>;

std::vector<SparseEntry> nonzeros(const ComplexVector& v) {
  std::vector<SparseEntry> entries;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != Complex{0.0, 0.0}) entries.emplace_back(i, v(i));
  }
  return entries;
}

// nonzero entries of the embedded basis column |phi_b1 phi_b2 phi_b3>
std::vector<SparseEntry> embedded_column(int b) {
  static const std::vector<SparseEntry> phi[2] = {nonzeros(state_S().amplitudes()),
                                                  nonzeros(state_A().amplitudes())};
  const auto& f1 = phi[(b >> 2) & 1];
  const auto& f2 = phi[(b >> 1) & 1];
  const auto& f3 = phi[b & 1];
  std::vector<SparseEntry> entries;
  entries.reserve(f1.size() * f2.size() * f3.size());
  constexpr Eigen::Index d = kThreeParticleDim;
  for (const auto& [i1, v1] : f1) {
    for (const auto& [i2, v2] : f2) {
      for (const auto& [i3, v3] : f3) {
        entries.emplace_back((i1 * d + i2) * d + i3, v1 * v2 * v3);
      }
    }
  }
  return entries;
}

int parity_sign_nine(Eigen::Index index) {
  int sign = 1;
  for (Eigen::Index rest = index, p = 0; p < 9; ++p, rest /= kOrbitalDim) {
    if (rest % kOrbitalDim != 0) sign = -sign;  // orbitals 1..3 are l=1
  }
  return sign;
}

}  // namespace

LogicalQubit::LogicalQubit(Complex c0_in, Complex c1_in) : c0(c0_in), c1(c1_in) {
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > kStructuralTol) {
    throw NotNormalizedError("LogicalQubit: |c0|^2 + |c1|^2 differs from 1");
  }
}

LogicalRegister3::LogicalRegister3(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != 8) {
    throw BadDimensionError("LogicalRegister3: expected 8 amplitudes");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kStructuralTol) {
    throw NotNormalizedError("LogicalRegister3: norm differs from 1");
  }
}

StateVector encode(const LogicalQubit& q) {
  return StateVector(q.c0 * state_S().amplitudes() + q.c1 * state_A().amplitudes());
}

LogicalQubit parity_on_logical(const LogicalQubit& q) { return LogicalQubit(q.c0, -q.c1); }

ComplexMatrix logical_phase_flip() { return pauli(PauliAxis::Z); }

StateVector embed(const LogicalRegister3& reg) {
  ComplexVector out = ComplexVector::Zero(kPhysicalDim);
  for (int b = 0; b < 8; ++b) {
    const Complex amp = reg.amplitudes()(b);
    if (amp == Complex{0.0, 0.0}) continue;
    for (const auto& [idx, val] : embedded_column(b)) {
      out(idx) += amp * val;
    }
  }
  return StateVector(std::move(out));
}

ComplexMatrix embedding_gram() {
  ComplexMatrix gram = ComplexMatrix::Zero(8, 8);
  std::vector<std::vector<SparseEntry>> cols;
  cols.reserve(8);
  for (int b = 0; b < 8; ++b) cols.push_back(embedded_column(b));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Complex sum{0.0, 0.0};
      for (const auto& [ia, va] : cols[i]) {
        for (const auto& [ib, vb] : cols[j]) {
          if (ia == ib) sum += std::conj(va) * vb;
        }
      }
      gram(i, j) = sum;
    }
  }
  return gram;
}

StateVector apply_physical_parity(const StateVector& v) {
  if (v.dim() != kPhysicalDim) {
    throw BadDimensionError("apply_physical_parity: expected a 64^3-dimensional state");
  }
  ComplexVector out = v.amplitudes();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (parity_sign_nine(i) < 0) out(i) = -out(i);
  }
  return StateVector(std::move(out));
}

double chi_conjugation_deviation(const ComplexMatrix& u) {
  if (u.rows() != 8 || u.cols() != 8) {
    throw BadDimensionError("chi_conjugation_deviation: expected an 8x8 operator");
  }
  const ComplexMatrix chi = build_chi(Frame::identity()).matrix;
  return (u * chi * u.adjoint() - chi).cwiseAbs().maxCoeff();
}

double logical_chi_invariance_check() {
  const ComplexMatrix z = logical_phase_flip();
  return chi_conjugation_deviation(triple_kron(z, z, z));
}

}  // namespace chiralsim
