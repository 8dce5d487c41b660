#include "chiralsim/report.hpp"

#include <cmath>
#include <sstream>

#include "chiralsim/version.hpp"

namespace chiralsim {

using nlohmann::ordered_json;

CheckRecord scalar_check(std::string name, double expected, double actual, double tolerance) {
  CheckRecord c;
  c.name = std::move(name);
  c.kind = "scalar";
  c.expected_value = expected;
  c.actual_value = actual;
  c.tolerance = tolerance;
  c.pass = std::abs(expected - actual) <= tolerance;
  return c;
}

CheckRecord verdict_check(std::string name, std::string expected, std::string actual) {
  CheckRecord c;
  c.name = std::move(name);
  c.kind = "verdict";
  c.expected_text = std::move(expected);
  c.actual_text = std::move(actual);
  c.pass = c.expected_text == c.actual_text;
  return c;
}

CheckRecord lower_bound_check(std::string name, double bound, double actual) {
  CheckRecord c;
  c.name = std::move(name);
  c.kind = "lower_bound";
  c.expected_value = bound;
  c.actual_value = actual;
  c.pass = actual > bound;
  return c;
}

bool ExperimentReport::all_passed() const {
  for (const CheckRecord& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

ordered_json ExperimentReport::to_json() const {
  ordered_json j;
  j["experiment"] = experiment;
  j["parameters"] = parameters;
  j["results"] = results;
  ordered_json jchecks = ordered_json::array();
  for (const CheckRecord& c : checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["kind"] = c.kind;
    if (c.kind == "verdict") {
      jc["expected"] = c.expected_text;
      jc["actual"] = c.actual_text;
    } else {
      jc["expected"] = c.expected_value;
      jc["actual"] = c.actual_value;
      if (c.kind == "scalar") jc["tolerance"] = c.tolerance;
    }
    jc["pass"] = c.pass;
    jchecks.push_back(std::move(jc));
  }
  j["checks"] = std::move(jchecks);
  j["version"] = version.empty() ? kVersion : version;
  return j;
}

std::string ExperimentReport::to_table() const {
  std::ostringstream out;
  out.precision(17);
  if (results.contains("correlations")) {
    const auto& c = results["correlations"];
    const char axis[3] = {'x', 'y', 'z'};
    for (int j = 0; j < 3; ++j) out << "a\t" << axis[j] << "\t-\t" << c["a"][j].get<double>() << "\n";
    for (int k = 0; k < 3; ++k) out << "b\t-\t" << axis[k] << "\t" << c["b"][k].get<double>() << "\n";
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        out << "t\t" << axis[j] << "\t" << axis[k] << "\t" << c["t"][j][k].get<double>() << "\n";
      }
    }
  }
  for (const CheckRecord& c : checks) {
    out << "check\t" << c.name << "\t" << (c.pass ? "pass" : "FAIL") << "\n";
  }
  return out.str();
}

ordered_json json_complex_matrix(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json json_real_matrix(const Matrix3& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json json_vector3(const Vector3& v) { return ordered_json::array({v(0), v(1), v(2)}); }

}  // namespace chiralsim
