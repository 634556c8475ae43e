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

/// Finite classical probability: expectation, conditioning on events,
/// conditional expectation given a random variable, best-predictor
/// verification, tower identity.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpredict/types.hpp"

namespace qpredict::classical {

/// One real value per outcome.
using RandomVariable = Eigen::VectorXd;
/// Membership flag per outcome.
using Event = Eigen::Array<bool, Eigen::Dynamic, 1>;

/// Finite outcome set with probability weights. Weights must be
/// nonnegative and sum to 1 within kProbabilityTol; inputs failing
/// normalization are rejected, not renormalized.
class FiniteSampleSpace {
 public:
  FiniteSampleSpace(std::vector<std::string> outcomes, RealVector weights);

  Eigen::Index size() const { return weights_.size(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const RealVector& weights() const { return weights_; }

  double probability(const Event& e) const;

 private:
  std::vector<std::string> outcomes_;
  RealVector weights_;
};

/// E[X] = sum_w X(w) P(w).
double expect(const FiniteSampleSpace& sp, const RandomVariable& x);

/// P_C with P_C(w) = P(w)/P(C) on C and 0 off C. Requires P(C) > 0.
FiniteSampleSpace condition(const FiniteSampleSpace& sp, const Event& c);

/// E[X|Y] as a random variable constant on each level set of Y, plus the
/// per-level representation. Levels are detected by exact equality of Y
/// values; zero-probability levels get value 0 and observed = false.
struct ConditionalRV {
  RandomVariable values;        // E[X|Y] evaluated per outcome
  std::vector<double> levels;   // distinct Y values, ascending
  RealVector level_values;      // predictor value per level
  BoolArray observed;           // P(Y = level) > 0
};

ConditionalRV cond_expect(const FiniteSampleSpace& sp, const RandomVariable& x,
                          const RandomVariable& y);

/// E[(X - phi(Y))^2] - E[(X - E[X|Y])^2]; nonnegative for every phi.
/// phi maps Y-levels to predictor values and must cover every level with
/// positive probability.
double best_predictor_gap(const FiniteSampleSpace& sp, const RandomVariable& x,
                          const RandomVariable& y,
                          const std::map<double, double>& phi);

/// |E[X g(Y)] - E[E[X|Y] g(Y)]|, the defining property of E[X|Y].
double defining_property_check(const FiniteSampleSpace& sp,
                               const RandomVariable& x,
                               const RandomVariable& y,
                               const std::map<double, double>& g);

/// |E_{P_j}[E[X|Y]] - E[X|Y = level]| with P_j the space conditioned on
/// {Y = level}. Requires P(Y = level) > 0.
double tower_check(const FiniteSampleSpace& sp, const RandomVariable& x,
                   const RandomVariable& y, double level);

}  // namespace qpredict::classical
