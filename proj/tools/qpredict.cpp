// Copyright 2026 The qpredict authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: analytic scenario reports, Monte Carlo
// measurement runs, and the randomized verification suite.
//
// Exit codes: 0 success, 1 contract/property failure, 2 invalid input.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qpredict/driver.hpp"
#include "qpredict/io.hpp"
#include "qpredict/verify.hpp"

namespace {

using namespace qpredict;

constexpr int kExitOk = 0;
constexpr int kExitContractFailure = 1;
constexpr int kExitInvalidInput = 2;

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string fmt(Complex z) {
  return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")";
}

struct ScenarioCli {
  std::string config_path;
  std::string kind;
  double a_re = std::nan(""), a_im = std::nan("");
  double b_re = std::nan(""), b_im = std::nan("");
  double a2 = std::nan("");
  std::string mode;
  double t = std::nan(""), energy = std::nan("");
  std::vector<double> x_detect, x_plus, x_minus;
  std::string observe;
  std::string out_path;
  std::string format = "table";
};

void add_scenario_flags(CLI::App* cmd, ScenarioCli& cli) {
  cmd->add_option("--config", cli.config_path, "scenario config JSON file");
  cmd->add_option("--kind", cli.kind, "double-slit|cat|epr");
  cmd->add_option("--a-re", cli.a_re, "Re a");
  cmd->add_option("--a-im", cli.a_im, "Im a");
  cmd->add_option("--b-re", cli.b_re, "Re b");
  cmd->add_option("--b-im", cli.b_im, "Im b");
  cmd->add_option("--a2", cli.a2,
                  "|a|^2 shorthand: a = sqrt(a2), b = sqrt(1 - a2), both real");
  cmd->add_option("--mode", cli.mode, "particle|wave (double-slit)");
  cmd->add_option("--t", cli.t, "propagation time (particle mode)");
  cmd->add_option("--energy", cli.energy, "energy (wave mode)");
  cmd->add_option("--x-detect", cli.x_detect, "detection point x y z")
      ->expected(3);
  cmd->add_option("--x-plus", cli.x_plus, "upper source x y z")->expected(3);
  cmd->add_option("--x-minus", cli.x_minus, "lower source x y z")->expected(3);
  cmd->add_option("--observe", cli.observe,
                  "conditioning branch: none|plus|minus|photon|no-photon");
  cmd->add_option("--out", cli.out_path, "write machine report to this path");
  cmd->add_option("--format", cli.format, "table|machine")
      ->check(CLI::IsMember({"table", "machine"}));
}

ScenarioConfig resolve_config(const CLI::App* cmd, const ScenarioCli& cli) {
  ScenarioConfig config;
  if (!cli.config_path.empty())
    config = io::config_from_json(io::load_file(cli.config_path));
  else if (cli.kind.empty())
    throw InvalidConfig("either --config or --kind is required");

  const auto passed = [cmd](const std::string& name) {
    return cmd->count(name) > 0;
  };
  if (passed("--kind")) {
    if (cli.kind == "double-slit")
      config.kind = ScenarioKind::two_source;
    else if (cli.kind == "cat")
      config.kind = ScenarioKind::cat;
    else if (cli.kind == "epr")
      config.kind = ScenarioKind::epr;
    else
      throw InvalidConfig("kind must be double-slit|cat|epr, got " + cli.kind);
  }
  if (passed("--a2")) {
    if (cli.a2 < 0.0 || cli.a2 > 1.0)
      throw InvalidConfig("--a2 must lie in [0, 1]");
    config.a = Complex(std::sqrt(cli.a2), 0.0);
    config.b = Complex(std::sqrt(1.0 - cli.a2), 0.0);
  }
  if (passed("--a-re")) config.a = Complex(cli.a_re, config.a.imag());
  if (passed("--a-im")) config.a = Complex(config.a.real(), cli.a_im);
  if (passed("--b-re")) config.b = Complex(cli.b_re, config.b.imag());
  if (passed("--b-im")) config.b = Complex(config.b.real(), cli.b_im);
  if (passed("--mode")) {
    if (cli.mode == "particle")
      config.mode = SourceMode::particle;
    else if (cli.mode == "wave")
      config.mode = SourceMode::wave;
    else
      throw InvalidConfig("mode must be particle|wave, got " + cli.mode);
  }
  if (passed("--t")) config.t = cli.t;
  if (passed("--energy")) config.energy = cli.energy;
  if (passed("--x-detect"))
    config.x_detect = {cli.x_detect[0], cli.x_detect[1], cli.x_detect[2]};
  if (passed("--x-plus"))
    config.x_plus = {cli.x_plus[0], cli.x_plus[1], cli.x_plus[2]};
  if (passed("--x-minus"))
    config.x_minus = {cli.x_minus[0], cli.x_minus[1], cli.x_minus[2]};
  if (passed("--observe")) config.observe = cli.observe;
  config.validate();
  return config;
}

void print_table(const RunReport& report) {
  const ScenarioConfig& config = report.config;
  std::cout << "scenario: "
            << (config.kind == ScenarioKind::two_source ? "double-slit"
                : config.kind == ScenarioKind::cat      ? "cat"
                                                        : "epr")
            << "\n";
  std::cout << "  a = " << fmt(config.a) << "  b = " << fmt(config.b) << "\n";
  if (report.two_source) {
    const TwoSourceReport& ts = *report.two_source;
    std::cout << "  mode: "
              << (config.mode == SourceMode::particle ? "particle" : "wave")
              << (config.mode == SourceMode::particle
                      ? "  t = " + fmt(config.t)
                      : "  energy = " + fmt(config.energy))
              << "\n";
    std::cout << "  amplitudes v+ = " << fmt(ts.amplitudes(0))
              << "  v- = " << fmt(ts.amplitudes(1)) << "\n";
    std::cout << "  unconditional intensity    " << fmt(ts.unconditional)
              << "\n";
    std::cout << "  conditioned coefficients   (" << fmt(ts.conditioned_coeffs(0))
              << ", " << fmt(ts.conditioned_coeffs(1)) << ")\n";
    std::cout << "  averaged predictor value   " << fmt(ts.averaged) << "\n";
    std::cout << "  interference term          " << fmt(ts.interference)
              << "\n";
    if (ts.observed_branch)
      std::cout << "  posterior intensity ("
                << (*ts.observed_branch == 0 ? "+" : "-") << ")  "
                << fmt(*ts.posterior_intensity) << "\n";
  }
  if (report.composite) {
    const CompositeReport& cr = *report.composite;
    for (Eigen::Index j = 0; j < cr.branch_probabilities.size(); ++j)
      std::cout << "  P(" << cr.branch_labels[static_cast<std::size_t>(j)]
                << ") = " << fmt(cr.branch_probabilities(j)) << "\n";
    for (Eigen::Index j = 0; j < cr.partner_probabilities.size(); ++j)
      std::cout << "  P(" << cr.partner_labels[static_cast<std::size_t>(j)]
                << ") = " << fmt(cr.partner_probabilities(j)) << "\n";
    std::cout << "  observed branch: "
              << cr.branch_labels[static_cast<std::size_t>(cr.observed_branch)]
              << "\n";
    for (Eigen::Index j = 0; j < cr.posterior_partner.size(); ++j)
      std::cout << "  P(" << cr.partner_labels[static_cast<std::size_t>(j)]
                << " | observed) = " << fmt(cr.posterior_partner(j)) << "\n";
    std::cout << "  certain value              " << fmt(cr.certain_value)
              << "\n";
    std::cout << "  charge residual            " << fmt(cr.charge_residual)
              << "\n";
  }
  std::cout << "  diagnostics:\n";
  std::cout << "    mse(predictor)           " << fmt(report.diagnostics.mse_predictor)
            << "\n";
  std::cout << "    mse(least squares)       "
            << fmt(report.diagnostics.mse_least_squares) << "\n";
  std::cout << "    projection residual      "
            << fmt(report.diagnostics.projection_residual) << "\n";
  std::cout << "    pythagoras residual      "
            << fmt(report.diagnostics.pythagoras_residual) << "\n";
  if (report.sample) {
    const SampleReport& s = *report.sample;
    std::cout << "  sample: shots = " << s.shots << "  seed = " << s.seed
              << "\n";
    for (std::size_t i = 0; i < s.outcome_labels.size(); ++i) {
      const auto idx = static_cast<Eigen::Index>(i);
      std::cout << "    " << s.outcome_labels[i] << "  count " << s.counts[i]
                << "  freq " << fmt(s.frequencies(idx)) << "  predicted "
                << fmt(s.predicted(idx));
      if (s.conditional_frequencies.size() > 0)
        std::cout << "  conditional " << fmt(s.conditional_frequencies(idx))
                  << " (predicted " << fmt(s.conditional_predicted(idx))
                  << ")";
      std::cout << "\n";
    }
    std::cout << "    max |freq - p|           " << fmt(s.max_abs_deviation)
              << "\n";
    std::cout << "    within bound             "
              << (s.within_bound ? "yes" : "no") << "\n";
    std::cout << "    certainty violations     " << s.certainty_violations
              << "\n";
  }
}

void emit(const RunReport& report, const ScenarioCli& cli) {
  const io::json machine = io::run_report_json(report);
  if (!cli.out_path.empty()) {
    std::ofstream out(cli.out_path);
    if (!out) throw InvalidConfig("cannot write " + cli.out_path);
    out << machine.dump(2) << "\n";
  }
  if (cli.format == "machine")
    std::cout << machine.dump(2) << "\n";
  else
    print_table(report);
}

/// Internal consistency checks on the analytic values; failures exit 1.
bool contract_checks_pass(const RunReport& report) {
  bool ok = true;
  if (report.two_source)
    ok = ok && report.two_source->decomposition_residual <= 1e-10;
  if (report.composite) {
    ok = ok && std::abs(report.composite->certain_value - 1.0) <= 1e-12;
    ok = ok && report.composite->charge_residual <= 1e-12;
  }
  return ok;
}

int run_scenario_command(const CLI::App* cmd, const ScenarioCli& cli) {
  const ScenarioConfig config = resolve_config(cmd, cli);
  const RunReport report = run_scenario(config);
  emit(report, cli);
  if (!contract_checks_pass(report)) {
    std::cerr << "contract check failed\n";
    return kExitContractFailure;
  }
  return kExitOk;
}

int run_sample_command(const CLI::App* cmd, const ScenarioCli& cli,
                       std::uint64_t shots, std::uint64_t seed) {
  const ScenarioConfig config = resolve_config(cmd, cli);
  const RunReport report = run_sample(config, shots, seed);
  emit(report, cli);
  if (!contract_checks_pass(report) || !report.sample->within_bound ||
      report.sample->certainty_violations != 0) {
    std::cerr << "sampling deviated beyond the statistical bound\n";
    return kExitContractFailure;
  }
  return kExitOk;
}

int run_verify_command(const VerifyOptions& options) {
  const VerifyResult result = run_verify(options);
  for (const SuiteResult& suite : result.suites)
    std::cout << (suite.passed ? "[PASS] " : "[FAIL] ") << suite.name
              << "  worst " << fmt(suite.worst) << "  trials " << suite.trials
              << "\n";
  if (!result.passed) {
    std::cerr << "first failing property: " << result.first_failure << "\n";
    return kExitContractFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prediction-operator toolkit: conditional expectation as the "
               "best predictor, classically and for quantum measurements"};
  app.require_subcommand(1);

  ScenarioCli scenario_cli;
  CLI::App* scenario_cmd =
      app.add_subcommand("scenario", "analytic report for one scenario");
  add_scenario_flags(scenario_cmd, scenario_cli);

  ScenarioCli sample_cli;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 12345;
  CLI::App* sample_cmd = app.add_subcommand(
      "sample", "analytic report plus seeded Monte Carlo comparison");
  add_scenario_flags(sample_cmd, sample_cli);
  sample_cmd->add_option("--shots", shots, "number of shots");
  sample_cmd->add_option("--seed", seed, "RNG seed");

  VerifyOptions verify_options;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "randomized property verification");
  verify_cmd->add_option("--min-dim", verify_options.min_dim, "smallest dim");
  verify_cmd->add_option("--max-dim", verify_options.max_dim, "largest dim");
  verify_cmd->add_option("--trials", verify_options.trials, "trials per suite");
  verify_cmd->add_option("--seed", verify_options.seed, "RNG seed");
  verify_cmd->add_option("--tol", verify_options.tol,
                         "tolerance for exact identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (scenario_cmd->parsed())
      return run_scenario_command(scenario_cmd, scenario_cli);
    if (sample_cmd->parsed())
      return run_sample_command(sample_cmd, sample_cli, shots, seed);
    return run_verify_command(verify_options);
  } catch (const InvalidConfig& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NotNormalized& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NonPositiveTime& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NonPositiveEnergy& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CoincidentPoints& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ZeroProbabilityBranch& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContractFailure;
  } catch (const io::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContractFailure;
  }
}
