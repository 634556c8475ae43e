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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qpredict/driver.hpp"
#include "qpredict/io.hpp"
#include "qpredict/verify.hpp"

using namespace qpredict;

namespace {

ScenarioConfig epr_config(double a2) {
  ScenarioConfig config;
  config.kind = ScenarioKind::epr;
  config.a = std::sqrt(a2);
  config.b = std::sqrt(1.0 - a2);
  return config;
}

}  // namespace

TEST_CASE("spin-pair run reports the Born weight and the certain event") {
  const RunReport report = run_scenario(epr_config(0.3));
  REQUIRE(report.composite.has_value());
  const CompositeReport& cr = *report.composite;
  CHECK(cr.branch_probabilities(1) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(cr.observed_branch == 1);
  CHECK(std::abs(cr.certain_value - 1.0) <= 1e-12);
  CHECK(cr.charge_residual <= 1e-12);
  // First-spin observable commutes with the second-spin algebra, so the
  // best-predictor identities are exact here.
  CHECK(report.diagnostics.projection_residual <= 1e-12);
  CHECK(report.diagnostics.pythagoras_residual <= 1e-12);
}

TEST_CASE("destructive interference shows up in the run report") {
  ScenarioConfig config;
  config.kind = ScenarioKind::two_source;
  config.a = 1.0 / std::sqrt(2.0);
  config.b = -config.a;
  const RunReport report = run_scenario(config);
  REQUIRE(report.two_source.has_value());
  CHECK(report.two_source->unconditional <= 1e-15);
  CHECK(report.two_source->decomposition_residual <= 1e-15);
  CHECK(report.two_source->interference ==
        doctest::Approx(-report.two_source->averaged).epsilon(1e-12));
}

TEST_CASE("observing a source branch reports its posterior intensity") {
  ScenarioConfig config;
  config.kind = ScenarioKind::two_source;
  config.a = 0.6;
  config.b = 0.8;
  config.observe = "minus";
  const RunReport report = run_scenario(config);
  REQUIRE(report.two_source->observed_branch.has_value());
  CHECK(*report.two_source->observed_branch == 1);
  CHECK(*report.two_source->posterior_intensity ==
        doctest::Approx(report.two_source->conditioned_coeffs(1))
            .epsilon(1e-12));
}

TEST_CASE("the echoed config reruns to identical analytic values") {
  ScenarioConfig config;
  config.kind = ScenarioKind::two_source;
  config.a = Complex(0.6, 0.0);
  config.b = Complex(0.0, 0.8);
  config.mode = SourceMode::wave;
  config.energy = 2.0;
  config.x_plus = {0, 0, 1};
  config.x_minus = {0, 0, -2};
  const RunReport first = run_scenario(config);
  const io::json echoed = io::run_report_json(first).at("config");
  const RunReport second = run_scenario(io::config_from_json(echoed));
  CHECK(io::run_report_json(first).dump() == io::run_report_json(second).dump());
}

TEST_CASE("cat runs condition on the quiet branch when asked") {
  ScenarioConfig config;
  config.kind = ScenarioKind::cat;
  config.a = std::sqrt(0.6);
  config.b = std::sqrt(0.4);
  config.observe = "no-photon";
  const RunReport report = run_scenario(config);
  CHECK(report.composite->observed_branch == 0);
  // No photon: the atom is certainly still excited.
  CHECK(std::abs(report.composite->posterior_partner(1) - 1.0) <= 1e-12);
}

TEST_CASE("a pure preparation degrades gracefully under default observation") {
  ScenarioConfig config;
  config.kind = ScenarioKind::cat;
  config.a = 1.0;
  config.b = 0.0;
  const RunReport report = run_scenario(config);  // photon branch is empty
  CHECK(report.composite->observed_branch == 0);
  CHECK(std::abs(report.composite->posterior_partner(1) - 1.0) <= 1e-12);
}

TEST_CASE("measurement plans are complete and anti-correlated") {
  const MeasurementPlan plan = measurement_plan(epr_config(0.4));
  REQUIRE(plan.stages.size() == 2);
  CHECK(plan.stages[0].is_complete());
  CHECK(plan.stages[1].is_complete());
  REQUIRE(plan.certainty.size() == 2);
  CHECK(plan.certainty[0].given == 0);
  CHECK(plan.certainty[0].required == 1);
}

TEST_CASE("sampling runs attach a within-bound report") {
  const RunReport report = run_sample(epr_config(0.3), 20000, 99);
  REQUIRE(report.sample.has_value());
  CHECK(report.sample->within_bound);
  CHECK(report.sample->certainty_violations == 0);
  CHECK(report.sample->shots == 20000);
}

TEST_CASE("default verification options pass") {
  VerifyOptions options;
  options.trials = 40;  // keep the unit suite quick
  const VerifyResult result = run_verify(options);
  CHECK(result.passed);
  CHECK(result.first_failure.empty());
  CHECK(result.suites.size() == 7);
}

TEST_CASE("a zero tolerance forces a named failure") {
  VerifyOptions options;
  options.trials = 5;
  options.tol = 0.0;
  const VerifyResult result = run_verify(options);
  CHECK_FALSE(result.passed);
  CHECK_FALSE(result.first_failure.empty());
}

TEST_CASE("verification transcripts are deterministic") {
  VerifyOptions options;
  options.trials = 10;
  const VerifyResult a = run_verify(options);
  const VerifyResult b = run_verify(options);
  REQUIRE(a.suites.size() == b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    CHECK(a.suites[i].passed == b.suites[i].passed);
    CHECK(a.suites[i].worst == b.suites[i].worst);
  }
}

TEST_CASE("invalid verify options are rejected") {
  VerifyOptions options;
  options.min_dim = 1;
  CHECK_THROWS_AS(run_verify(options), InvalidConfig);
  options.min_dim = 2;
  options.max_dim = 64;
  CHECK_THROWS_AS(run_verify(options), InvalidConfig);
}
