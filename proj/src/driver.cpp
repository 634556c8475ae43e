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

#include "qpredict/driver.hpp"

#include <cmath>

namespace qpredict {

namespace {

CompositeScenario build_composite(const ScenarioConfig& config) {
  return config.kind == ScenarioKind::cat ? build_cat(config.a, config.b)
                                          : build_epr(config.a, config.b);
}

/// Conditioning branch index selected by the `observe` token; the
/// anti-correlated branch (index 1) is the canonical default.
Eigen::Index observed_branch(const ScenarioConfig& config) {
  if (config.kind == ScenarioKind::cat)
    return config.observe == "no-photon" ? 0 : 1;
  return config.observe == "plus" ? 0 : 1;
}

RealVector family_weights(const DensityOperator& w,
                          const ProjectorFamily& fam) {
  RealVector out(fam.size());
  for (Eigen::Index j = 0; j < fam.size(); ++j)
    out(j) = trace_product(w.matrix(), fam[j]).real();
  return out;
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& config) {
  config.validate();
  RunReport report;
  report.config = config;

  if (config.kind == ScenarioKind::two_source) {
    const TwoSourceConfig cfg = config.two_source();
    const TwoSourceScenario scn = build_two_source(cfg);
    TwoSourceReport ts;
    ts.unconditional = unconditional_intensity(cfg);
    ts.conditioned_coeffs = conditioned_predictor(cfg).coeffs;
    ts.amplitudes = scn.amplitudes;
    ts.averaged = averaged_predictor_expectation(cfg);
    ts.interference = interference_term(cfg);
    ts.decomposition_residual =
        std::abs(ts.unconditional - ts.averaged - ts.interference);
    if (config.observe != "none") {
      ts.observed_branch = config.observe == "plus" ? 0 : 1;
      ts.posterior_intensity = posterior_expectation(
          scn.state, scn.effective_observable, scn.family, *ts.observed_branch);
    }
    report.two_source = std::move(ts);
    report.diagnostics =
        optimality_report(scn.state, scn.effective_observable, scn.family);
    return report;
  }

  const CompositeScenario scn = build_composite(config);
  CompositeReport cr;
  cr.branch_labels = scn.family_labels;
  cr.branch_probabilities = family_weights(scn.state, scn.family);
  cr.partner_labels = scn.partner_labels;
  cr.partner_probabilities = family_weights(scn.state, scn.partner_family);
  cr.observed_branch = observed_branch(config);
  if (config.observe == "none" &&
      cr.branch_probabilities(cr.observed_branch) <= kValidationTol)
    cr.observed_branch = 1 - cr.observed_branch;
  const DensityOperator reduced =
      reduce_state(scn.state, scn.family[cr.observed_branch]);
  cr.posterior_partner = family_weights(reduced, scn.partner_family);
  // Anti-correlation: branch j of the observed family pins the partner to
  // outcome 1 - j.
  cr.certain_value = cr.posterior_partner(1 - cr.observed_branch);
  cr.charge_residual = charge_residual(scn);
  report.composite = std::move(cr);
  report.diagnostics =
      optimality_report(scn.state, scn.partner_family[0], scn.family);
  return report;
}

MeasurementPlan measurement_plan(const ScenarioConfig& config) {
  config.validate();
  MeasurementPlan plan;
  if (config.kind == ScenarioKind::two_source) {
    const TwoSourceScenario scn = build_two_source(config.two_source());
    plan.stages = {scn.family};
    plan.labels = {{"source=+", "source=-"}};
    return plan;
  }
  const CompositeScenario scn = build_composite(config);
  plan.stages = {scn.family, scn.partner_family};
  plan.labels = {scn.family_labels, scn.partner_labels};
  plan.certainty = {{0, 1}, {1, 0}};
  return plan;
}

RunReport run_sample(const ScenarioConfig& config, std::uint64_t shots,
                     std::uint64_t seed) {
  RunReport report = run_scenario(config);
  const MeasurementPlan plan = measurement_plan(config);
  const DensityOperator initial =
      config.kind == ScenarioKind::two_source
          ? build_two_source(config.two_source()).state
          : build_composite(config).state;
  report.sample = run_experiment(initial, plan, shots, seed);
  return report;
}

}  // namespace qpredict
