// chiralsim: experiment runner for chirality communication with quantum
// states. Each subcommand runs one scenario end to end and prints a
// machine-readable report; the exit status is 0 only if every check in
// the report passed.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chiralsim/experiments.hpp"
#include "chiralsim/version.hpp"

namespace {

using namespace chiralsim;

struct FrameFlags {
  std::vector<double> axis{0.0, 0.0, 1.0};
  double angle = 0.0;
  bool mirror = false;

  FrameSpec to_spec() const {
    FrameSpec spec;
    spec.axis = Vector3(axis[0], axis[1], axis[2]);
    spec.angle = angle;
    spec.mirror = mirror;
    return spec;
  }
};

void add_frame_flags(CLI::App* cmd, const std::string& who, FrameFlags& flags) {
  cmd->add_option("--" + who + "-axis", flags.axis,
                  who + " rotation axis as x,y,z (normalized before use)")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--" + who + "-angle", flags.angle, who + " rotation angle in radians");
  cmd->add_flag("--" + who + "-mirror", flags.mirror, "invert all of " + who + "'s axes");
}

Shots parse_shots(const std::string& text) {
  if (text == "exact") return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long n = std::stoull(text, &used);
    if (used != text.size() || n == 0) throw ParseError("");
    return static_cast<std::uint64_t>(n);
  } catch (const std::exception&) {
    throw ParseError("--shots expects 'exact' or a positive integer, got '" + text + "'");
  }
}

int emit(const ExperimentReport& report, const std::string& output_mode) {
  if (output_mode == "table") {
    std::cout << report.to_table();
  } else {
    std::cout << report.to_json().dump(2) << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chirality-communication experiments: correlation tomography, "
               "the three-qubit chirality protocol, and quantum gloves"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string shots_text = "exact";
  std::uint64_t seed = 0;
  std::string output_mode = "report";
  double tolerance = -1.0;  // <0 means "no override"
  bool tolerance_set = false;

  auto add_common = [&](CLI::App* cmd, bool with_shots) {
    if (with_shots) {
      cmd->add_option("--shots", shots_text, "'exact' or a positive sample count")
          ->capture_default_str();
      cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    }
    cmd->add_option("--output", output_mode, "report (JSON) or table")
        ->check(CLI::IsMember({"report", "table"}))
        ->capture_default_str();
    cmd->add_option("--tolerance", tolerance, "override default check tolerances")
        ->each([&](const std::string&) { tolerance_set = true; });
  };

  // tomography
  auto* tomo = app.add_subcommand(
      "tomography", "measure Pauli correlations in two frames and reconstruct the state");
  std::string state_text = "singlet";
  FrameFlags alice_flags, bob_flags;
  tomo->add_option("--state", state_text, "singlet | werner:<p> | <matrix file>")
      ->capture_default_str();
  add_frame_flags(tomo, "alice", alice_flags);
  add_frame_flags(tomo, "bob", bob_flags);
  add_common(tomo, true);

  // chi-protocol
  auto* chi = app.add_subcommand(
      "chi-protocol", "send rho+- and measure the chirality operator in Bob's frame");
  std::string label_text = "plus";
  FrameFlags chi_bob_flags;
  chi->add_option("--label", label_text, "plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  add_frame_flags(chi, "bob", chi_bob_flags);
  add_common(chi, true);

  // gloves
  auto* gloves_cmd =
      app.add_subcommand("gloves", "discriminate a quantum glove, optionally after reflection");
  std::string handedness_text = "plus";
  bool receiver_mirrored = false;
  gloves_cmd->add_option("--handedness", handedness_text, "plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  gloves_cmd->add_flag("--receiver-mirrored", receiver_mirrored,
                       "receiver of opposite chirality (applies P x P x P)");
  add_common(gloves_cmd, false);

  // encoded
  auto* encoded = app.add_subcommand(
      "encoded", "verify the parity-encoded logical qubits and chi's reflection invariance");
  encoded->add_option("--seed", seed, "RNG seed")->capture_default_str();
  add_common(encoded, false);

  // suite
  auto* suite = app.add_subcommand("suite", "run every module-level verification check");
  suite->add_option("--seed", seed, "RNG seed")->capture_default_str();
  suite->add_option("--output", output_mode, "report (JSON) or table")
      ->check(CLI::IsMember({"report", "table"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  try {
    RunOptions opt;
    opt.shots = parse_shots(shots_text);
    opt.seed = seed;
    if (tolerance_set) {
      if (tolerance <= 0) throw ParseError("--tolerance must be positive");
      opt.tolerance = tolerance;
    }

    if (tomo->parsed()) {
      return emit(run_tomography(StateSpec::parse(state_text), alice_flags.to_spec(),
                                 bob_flags.to_spec(), opt),
                  output_mode);
    }
    if (chi->parsed()) {
      const ChiralityLabel label =
          label_text == "plus" ? ChiralityLabel::Plus : ChiralityLabel::Minus;
      return emit(run_chi_protocol(label, chi_bob_flags.to_spec(), opt), output_mode);
    }
    if (gloves_cmd->parsed()) {
      const Handedness h = handedness_text == "plus" ? Handedness::Plus : Handedness::Minus;
      return emit(run_gloves(h, receiver_mirrored, opt), output_mode);
    }
    if (encoded->parsed()) {
      return emit(run_encoded(opt), output_mode);
    }
    return emit(run_suite(seed), output_mode);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadAxisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
