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

/// Glue between scenario configurations and the reports the CLI emits:
/// analytic predictions, optimality diagnostics, measurement plans and
/// Monte Carlo comparisons.

#pragma once

#include <cstdint>
#include <optional>

#include "qpredict/conditional.hpp"
#include "qpredict/sampler.hpp"
#include "qpredict/scenarios.hpp"

namespace qpredict {

struct TwoSourceReport {
  double unconditional = 0.0;
  RealVector conditioned_coeffs;  // (|v_+|^2, |v_-|^2)
  Vector amplitudes;              // (v_+, v_-)
  double averaged = 0.0;
  double interference = 0.0;
  // |unconditional - averaged - interference|, zero by construction
  double decomposition_residual = 0.0;
  std::optional<Eigen::Index> observed_branch;
  std::optional<double> posterior_intensity;
};

struct CompositeReport {
  std::vector<std::string> branch_labels;
  RealVector branch_probabilities;  // tr(W B_j)
  std::vector<std::string> partner_labels;
  RealVector partner_probabilities;  // unconditional, partner family
  Eigen::Index observed_branch = 0;
  RealVector posterior_partner;  // partner distribution after reduction
  double certain_value = 0.0;    // the entry predicted to be 1
  double charge_residual = 0.0;
};

struct RunReport {
  ScenarioConfig config;
  std::optional<TwoSourceReport> two_source;
  std::optional<CompositeReport> composite;
  OptimalityReport diagnostics;
  std::optional<SampleReport> sample;
};

/// Analytic quantities and diagnostics for a validated configuration.
RunReport run_scenario(const ScenarioConfig& config);

/// Measurement plan driven by the scenario: the observed family first,
/// then (for the composite scenarios) the partner family, with the exact
/// anti-correlation certainty checks.
MeasurementPlan measurement_plan(const ScenarioConfig& config);

/// run_scenario plus a seeded Monte Carlo comparison.
RunReport run_sample(const ScenarioConfig& config, std::uint64_t shots,
                     std::uint64_t seed);

}  // namespace qpredict
