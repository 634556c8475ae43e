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

#include "qpredict/classical.hpp"

#include <algorithm>
#include <cmath>

namespace qpredict::classical {

namespace {

void require_same_length(const FiniteSampleSpace& sp, Eigen::Index n) {
  if (n != sp.size()) throw DimMismatch(sp.size(), n);
}

}  // namespace

FiniteSampleSpace::FiniteSampleSpace(std::vector<std::string> outcomes,
                                     RealVector weights)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)) {
  if (static_cast<Eigen::Index>(outcomes_.size()) != weights_.size())
    throw DimMismatch(weights_.size(),
                      static_cast<Eigen::Index>(outcomes_.size()));
  if (weights_.size() == 0)
    throw InvalidConfig("sample space must have at least one outcome");
  if (!weights_.allFinite())
    throw InvalidConfig("probability weights must be finite");
  if ((weights_.array() < 0.0).any())
    throw InvalidConfig("probability weights must be nonnegative");
  const double total = weights_.sum();
  if (!(std::abs(total - 1.0) <= kProbabilityTol))
    throw InvalidConfig("probability weights must sum to 1, got " +
                        std::to_string(total));
}

double FiniteSampleSpace::probability(const Event& e) const {
  require_same_length(*this, e.size());
  return e.select(weights_.array(), 0.0).sum();
}

double expect(const FiniteSampleSpace& sp, const RandomVariable& x) {
  require_same_length(sp, x.size());
  return sp.weights().dot(x);
}

FiniteSampleSpace condition(const FiniteSampleSpace& sp, const Event& c) {
  require_same_length(sp, c.size());
  RealVector masked = c.select(sp.weights().array(), 0.0).matrix();
  const double mass = masked.sum();
  if (mass <= 0.0) throw ZeroProbabilityEvent();
  // A space already carried by C and normalized is a fixed point; skipping
  // the division keeps conditioning exactly idempotent.
  if (std::abs(mass - 1.0) > 1e-13) masked /= mass;
  return FiniteSampleSpace(sp.outcomes(), std::move(masked));
}

ConditionalRV cond_expect(const FiniteSampleSpace& sp, const RandomVariable& x,
                          const RandomVariable& y) {
  require_same_length(sp, x.size());
  require_same_length(sp, y.size());

  std::vector<double> levels(y.data(), y.data() + y.size());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  const auto n_levels = static_cast<Eigen::Index>(levels.size());
  RealVector level_values = RealVector::Zero(n_levels);
  BoolArray observed = BoolArray::Constant(n_levels, false);
  for (Eigen::Index j = 0; j < n_levels; ++j) {
    double mass = 0.0;
    double weighted = 0.0;
    for (Eigen::Index w = 0; w < sp.size(); ++w) {
      if (y(w) == levels[static_cast<std::size_t>(j)]) {
        mass += sp.weights()(w);
        weighted += sp.weights()(w) * x(w);
      }
    }
    if (mass > 0.0) {
      level_values(j) = weighted / mass;
      observed(j) = true;
    }
  }

  RandomVariable values(sp.size());
  for (Eigen::Index w = 0; w < sp.size(); ++w) {
    const auto it = std::lower_bound(levels.begin(), levels.end(), y(w));
    values(w) = level_values(it - levels.begin());
  }
  return {std::move(values), std::move(levels), std::move(level_values),
          std::move(observed)};
}

namespace {

/// phi(Y(w)) looked up by exact level value; throws on levels carrying
/// positive probability that phi does not cover.
double lookup_level(const std::map<double, double>& phi, double level) {
  const auto it = phi.find(level);
  if (it == phi.end()) throw MissingLevel(level);
  return it->second;
}

}  // namespace

double best_predictor_gap(const FiniteSampleSpace& sp, const RandomVariable& x,
                          const RandomVariable& y,
                          const std::map<double, double>& phi) {
  require_same_length(sp, x.size());
  require_same_length(sp, y.size());
  const ConditionalRV cond = cond_expect(sp, x, y);
  double mse_phi = 0.0;
  double mse_cond = 0.0;
  for (Eigen::Index w = 0; w < sp.size(); ++w) {
    const double p = sp.weights()(w);
    if (p == 0.0) continue;
    const double d_phi = x(w) - lookup_level(phi, y(w));
    const double d_cond = x(w) - cond.values(w);
    mse_phi += p * d_phi * d_phi;
    mse_cond += p * d_cond * d_cond;
  }
  return mse_phi - mse_cond;
}

double defining_property_check(const FiniteSampleSpace& sp,
                               const RandomVariable& x,
                               const RandomVariable& y,
                               const std::map<double, double>& g) {
  require_same_length(sp, x.size());
  require_same_length(sp, y.size());
  const ConditionalRV cond = cond_expect(sp, x, y);
  double lhs = 0.0;
  double rhs = 0.0;
  for (Eigen::Index w = 0; w < sp.size(); ++w) {
    const double p = sp.weights()(w);
    if (p == 0.0) continue;
    const double gy = lookup_level(g, y(w));
    lhs += p * x(w) * gy;
    rhs += p * cond.values(w) * gy;
  }
  return std::abs(lhs - rhs);
}

double tower_check(const FiniteSampleSpace& sp, const RandomVariable& x,
                   const RandomVariable& y, double level) {
  require_same_length(sp, x.size());
  require_same_length(sp, y.size());
  const ConditionalRV cond = cond_expect(sp, x, y);
  const auto it = std::find(cond.levels.begin(), cond.levels.end(), level);
  if (it == cond.levels.end()) throw ZeroProbabilityEvent();
  const auto j = it - cond.levels.begin();
  if (!cond.observed(j)) throw ZeroProbabilityEvent();

  const Event level_set = (y.array() == level);
  const FiniteSampleSpace conditioned = condition(sp, level_set);
  return std::abs(expect(conditioned, cond.values) - cond.level_values(j));
}

}  // namespace qpredict::classical
