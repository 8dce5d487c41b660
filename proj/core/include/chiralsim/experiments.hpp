#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chiralsim/chirality.hpp"
#include "chiralsim/gloves.hpp"
#include "chiralsim/report.hpp"
#include "chiralsim/tomography.hpp"

namespace chiralsim {

/// Frame given as mirror-then-rotate: M = (-I)^mirror . R(axis, angle),
/// so det(M) = (-1)^mirror. The axis is normalized on resolution.
struct FrameSpec {
  Vector3 axis = Vector3(0, 0, 1);
  double angle = 0.0;
  bool mirror = false;

  Frame resolve() const;
  bool is_identity() const;
  bool is_pure_mirror() const;
};

/// Two-qubit input state: the singlet, a Werner state, or a matrix file.
struct StateSpec {
  enum class Kind { Singlet, Werner, File };
  Kind kind = Kind::Singlet;
  double werner_p = 1.0;
  std::string path;

  /// Accepts "singlet", "werner:<p>", or a file path.
  static StateSpec parse(const std::string& text);
  DensityMatrix resolve() const;
  std::string describe() const;
};

/// Plain-text density matrix file: a one-line dimension header, then the
/// row-major entries as whitespace-separated "re im" pairs.
DensityMatrix load_state_file(const std::string& path);
void save_state_file(const std::string& path, const ComplexMatrix& m);

struct RunOptions {
  Shots shots;  // nullopt = exact expectations
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // overrides default check tolerances
};

/// Statistical bound used for sampled-correlation checks: 0.02 at 1e5
/// shots, scaling as 1/sqrt(shots) (a >6 sigma band for +-1 outcomes).
double sampled_tolerance(std::uint64_t shots);

ExperimentReport run_tomography(const StateSpec& state, const FrameSpec& alice,
                                const FrameSpec& bob, const RunOptions& opt);

ExperimentReport run_chi_protocol(ChiralityLabel label, const FrameSpec& bob,
                                  const RunOptions& opt);

ExperimentReport run_gloves(Handedness handedness, bool receiver_mirrored,
                            const RunOptions& opt = {});

ExperimentReport run_encoded(const RunOptions& opt);

/// Aggregates the per-module verification checks into one report.
ExperimentReport run_suite(std::uint64_t seed);

}  // namespace chiralsim
