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

/// Seeded Monte Carlo simulation of projective measurements: outcome j is
/// drawn with probability tr(W B_j) and the state collapses to
/// B_j W B_j / tr(W B_j). Runs are deterministic given (plan, shots, seed).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpredict/algebra.hpp"
#include "qpredict/conditional.hpp"
#include "qpredict/operators.hpp"
#include "qpredict/rng.hpp"
#include "qpredict/types.hpp"

namespace qpredict {

/// Index drawn from cumulative weights with a single uniform draw. Ties at
/// interval boundaries resolve toward the lower index; zero-weight
/// outcomes are never selected.
Eigen::Index sample_index(const RealVector& probabilities, double u);

struct MeasurementRecord {
  Eigen::Index outcome;
  DensityOperator pre_state;
  DensityOperator post_state;
};

/// One projective measurement of a complete family: Born-rule outcome plus
/// collapsed state.
MeasurementRecord born_sample(const DensityOperator& w,
                              const ProjectorFamily& fam, SplitMix64& rng);

/// One or two measurement stages applied in order, with optional exact
/// certainty constraints between consecutive stages ("whenever stage 0
/// yields `given`, stage 1 must yield `required`").
struct MeasurementPlan {
  std::vector<ProjectorFamily> stages;
  std::vector<std::vector<std::string>> labels;  // per stage, per outcome

  struct CertaintyPair {
    Eigen::Index given;
    Eigen::Index required;
  };
  std::vector<CertaintyPair> certainty;
};

struct SampleReport {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> outcome_labels;  // flattened joint outcomes
  std::vector<std::uint64_t> counts;
  RealVector frequencies;
  RealVector predicted;
  // Two-stage runs only (empty otherwise): per joint index (j, k), the
  // frequency of stage-1 outcome k among the shots whose stage-0 outcome
  // was j, and its chain-rule prediction tr(W_j B'_k).
  RealVector conditional_frequencies;
  RealVector conditional_predicted;
  double max_abs_deviation = 0.0;
  bool within_bound = true;
  std::uint64_t certainty_violations = 0;
};

/// Runs `shots` independent shots of the plan from the initial state.
/// Joint counts are reported against the chain-rule probabilities
/// P(j,k) = tr(W B_j) tr(W_j B'_k). Fully deterministic given the seed;
/// shot s draws from the stream derived from (seed, s).
SampleReport run_experiment(const DensityOperator& initial,
                            const MeasurementPlan& plan, std::uint64_t shots,
                            std::uint64_t seed);

struct DeviationReport {
  double max_abs_dev = 0.0;
  bool within_bound = true;
};

/// Per-outcome comparison of empirical frequencies against predictions:
/// within_bound iff every |freq - p| <= 4 sqrt(p(1-p)/shots) + 1/shots.
DeviationReport deviation_report(const SampleReport& report);

}  // namespace qpredict
