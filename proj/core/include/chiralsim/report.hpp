#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chiralsim/linalg.hpp"

namespace chiralsim {

/// One verification record inside a report. Scalar checks pass when
/// |expected - actual| <= tolerance; named comparisons (verdicts, lower
/// bounds) carry their rule in `kind`.
struct CheckRecord {
  std::string name;
  std::string kind;  // "scalar", "verdict", "lower_bound"
  double expected_value = 0.0;
  double actual_value = 0.0;
  std::string expected_text;
  std::string actual_text;
  double tolerance = 0.0;
  bool pass = false;
};

CheckRecord scalar_check(std::string name, double expected, double actual, double tolerance);
CheckRecord verdict_check(std::string name, std::string expected, std::string actual);
CheckRecord lower_bound_check(std::string name, double bound, double actual);

/// Machine-readable record of one experiment run: the inputs echoed back
/// (enough to reproduce the run exactly), the numeric payload, and the
/// pass/fail check list.
struct ExperimentReport {
  std::string experiment;
  nlohmann::ordered_json parameters;
  nlohmann::ordered_json results;
  std::vector<CheckRecord> checks;
  std::string version;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_table() const;
};

// json encodings: complex entries as [re, im]
nlohmann::ordered_json json_complex_matrix(const ComplexMatrix& m);
nlohmann::ordered_json json_real_matrix(const Matrix3& m);
nlohmann::ordered_json json_vector3(const Vector3& v);

}  // namespace chiralsim
