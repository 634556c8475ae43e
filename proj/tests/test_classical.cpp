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
#include <map>

#include "doctest.h"
#include "qpredict/classical.hpp"
#include "qpredict/random.hpp"

using namespace qpredict;
using namespace qpredict::classical;

namespace {

RealVector weights4(double p0, double p1, double p2, double p3) {
  RealVector w(4);
  w << p0, p1, p2, p3;
  return w;
}

/// Joint pmf over (X, Y) in {+1,-1}^2, outcome order
/// (+1,+1), (+1,-1), (-1,+1), (-1,-1).
struct SpinPair {
  FiniteSampleSpace sp;
  RandomVariable x;
  RandomVariable y;
};

SpinPair spin_pair(const RealVector& weights) {
  RandomVariable x(4), y(4);
  x << 1, 1, -1, -1;
  y << 1, -1, 1, -1;
  return {FiniteSampleSpace({"++", "+-", "-+", "--"}, weights), x, y};
}

}  // namespace

TEST_CASE("sample space validation") {
  CHECK_NOTHROW(FiniteSampleSpace({"a", "b"}, weights4(0.5, 0.5, 0, 0).head(2)));
  CHECK_THROWS_AS(FiniteSampleSpace({"a", "b"}, weights4(0.7, 0.4, 0, 0).head(2)),
                  InvalidConfig);
  RealVector negative(2);
  negative << 1.2, -0.2;
  CHECK_THROWS_AS(FiniteSampleSpace({"a", "b"}, negative), InvalidConfig);
  CHECK_THROWS_AS(FiniteSampleSpace({"a"}, weights4(0.5, 0.5, 0, 0).head(2)),
                  DimMismatch);
}

TEST_CASE("expectation by enumeration") {
  const SpinPair uniform = spin_pair(weights4(0.25, 0.25, 0.25, 0.25));
  CHECK(expect(uniform.sp, uniform.x) == 0.0);

  const SpinPair point = spin_pair(weights4(0, 0, 1, 0));
  CHECK(expect(point.sp, point.x) == -1.0);

  const SpinPair skew = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  CHECK(expect(skew.sp, skew.x) == doctest::Approx(-0.4).epsilon(1e-14));

  RandomVariable too_short(3);
  too_short << 1, 2, 3;
  CHECK_THROWS_AS(expect(skew.sp, too_short), DimMismatch);
}

TEST_CASE("conditioning on the whole space is the identity") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  const Event all = Event::Constant(4, true);
  const FiniteSampleSpace same = condition(pair.sp, all);
  CHECK((same.weights().array() == pair.sp.weights().array()).all());
}

TEST_CASE("conditioning on a single outcome gives a point mass") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  Event single = Event::Constant(4, false);
  single(2) = true;
  const FiniteSampleSpace point = condition(pair.sp, single);
  CHECK(point.weights()(2) == 1.0);
  CHECK(point.weights().sum() == 1.0);
}

TEST_CASE("conditioning renormalizes on the event") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  Event tail = Event::Constant(4, false);
  tail(2) = tail(3) = true;
  const FiniteSampleSpace conditioned = condition(pair.sp, tail);
  CHECK(conditioned.weights()(0) == 0.0);
  CHECK(conditioned.weights()(1) == 0.0);
  CHECK(conditioned.weights()(2) == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
  CHECK(conditioned.weights()(3) == doctest::Approx(4.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("conditioning on a null event throws") {
  const SpinPair pair = spin_pair(weights4(0.5, 0.5, 0.0, 0.0));
  Event null_event = Event::Constant(4, false);
  CHECK_THROWS_AS(condition(pair.sp, null_event), ZeroProbabilityEvent);
  null_event(3) = true;  // present but carries no mass
  CHECK_THROWS_AS(condition(pair.sp, null_event), ZeroProbabilityEvent);
}

TEST_CASE("conditioning is exactly idempotent") {
  RandomSource rnd(201);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rnd.integer(6));
    std::vector<std::string> labels;
    for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const FiniteSampleSpace sp(labels, rnd.pmf(n));
    Event e = Event::Constant(n, false);
    for (Eigen::Index i = 0; i < n; ++i) e(i) = rnd.uniform() < 0.6;
    e(0) = true;
    const FiniteSampleSpace once = condition(sp, e);
    const FiniteSampleSpace twice = condition(once, e);
    CHECK((twice.weights().array() == once.weights().array()).all());
  }
}

TEST_CASE("conditional expectation under independence is constant zero") {
  const SpinPair uniform = spin_pair(weights4(0.25, 0.25, 0.25, 0.25));
  const ConditionalRV cond = cond_expect(uniform.sp, uniform.x, uniform.y);
  CHECK((cond.values.array() == 0.0).all());
}

TEST_CASE("conditional expectation given full information is X itself") {
  // Power-of-two weights keep the per-level ratio (p x)/p exact.
  const FiniteSampleSpace sp({"a", "b", "c"},
                             (RealVector(3) << 0.25, 0.25, 0.5).finished());
  RandomVariable x(3), y(3);
  x << 7, -2, 4;
  y << 1, 2, 3;  // injective
  const ConditionalRV cond = cond_expect(sp, x, y);
  CHECK((cond.values.array() == x.array()).all());
}

TEST_CASE("conditional expectation by enumeration") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  const ConditionalRV cond = cond_expect(pair.sp, pair.x, pair.y);
  // Levels ascend: y = -1 then y = +1.
  REQUIRE(cond.levels.size() == 2);
  CHECK(cond.levels[0] == -1.0);
  // E[X|Y=-1] = (0.2 - 0.4) / 0.6, E[X|Y=+1] = (0.1 - 0.3) / 0.4.
  CHECK(cond.level_values(0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(cond.level_values(1) == doctest::Approx(-0.5).epsilon(1e-14));
  // Constant on level sets, exactly.
  CHECK(cond.values(0) == cond.values(2));
  CHECK(cond.values(1) == cond.values(3));
}

TEST_CASE("zero-probability levels are masked") {
  const FiniteSampleSpace sp({"a", "b", "c"},
                             (RealVector(3) << 0.5, 0.5, 0.0).finished());
  RandomVariable x(3), y(3);
  x << 1, 2, 9;
  y << 0, 0, 5;
  const ConditionalRV cond = cond_expect(sp, x, y);
  REQUIRE(cond.levels.size() == 2);
  CHECK(cond.observed(0));
  CHECK_FALSE(cond.observed(1));
  CHECK(cond.level_values(1) == 0.0);
  CHECK(cond.values(2) == 0.0);
}

TEST_CASE("best predictor gap vanishes at the conditional expectation") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  const ConditionalRV cond = cond_expect(pair.sp, pair.x, pair.y);
  std::map<double, double> optimal;
  for (std::size_t j = 0; j < cond.levels.size(); ++j)
    optimal[cond.levels[j]] = cond.level_values(static_cast<Eigen::Index>(j));
  CHECK(best_predictor_gap(pair.sp, pair.x, pair.y, optimal) == 0.0);
}

TEST_CASE("information strictly helps an injective observation") {
  const FiniteSampleSpace sp({"a", "b"},
                             (RealVector(2) << 0.5, 0.5).finished());
  RandomVariable x(2), y(2);
  x << 1, -1;
  y << 0, 1;
  const std::map<double, double> mean_only{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(best_predictor_gap(sp, x, y, mean_only) > 0.1);
}

TEST_CASE("best predictor gap for the zero predictor") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  const std::map<double, double> zero{{-1.0, 0.0}, {1.0, 0.0}};
  // E[X^2] = 1 and E[(X - E[X|Y])^2] = 1 - (0.4*0.25 + 0.6/9) = 5/6.
  CHECK(best_predictor_gap(pair.sp, pair.x, pair.y, zero) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("predictors must cover observed levels") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  const std::map<double, double> partial{{1.0, 0.0}};
  CHECK_THROWS_AS(best_predictor_gap(pair.sp, pair.x, pair.y, partial),
                  MissingLevel);
}

TEST_CASE("best predictor gap is nonnegative over random instances") {
  RandomSource rnd(202);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rnd.integer(7));
    std::vector<std::string> labels;
    for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const FiniteSampleSpace sp(labels, rnd.pmf(n));
    const RandomVariable x = rnd.real_vector(n);
    RandomVariable y(n);
    for (Eigen::Index i = 0; i < n; ++i)
      y(i) = static_cast<double>(rnd.integer(3));
    std::map<double, double> phi;
    for (double level : {0.0, 1.0, 2.0}) phi[level] = rnd.normal();
    CHECK(best_predictor_gap(sp, x, y, phi) >= -1e-12);
  }
}

TEST_CASE("defining property: tower at the identity and per-level balance") {
  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  const std::map<double, double> one{{-1.0, 1.0}, {1.0, 1.0}};
  CHECK(defining_property_check(pair.sp, pair.x, pair.y, one) <= 1e-12);
  const std::map<double, double> indicator{{-1.0, 0.0}, {1.0, 1.0}};
  CHECK(defining_property_check(pair.sp, pair.x, pair.y, indicator) <= 1e-12);
}

TEST_CASE("defining property holds over random instances") {
  RandomSource rnd(203);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rnd.integer(7));
    std::vector<std::string> labels;
    for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const FiniteSampleSpace sp(labels, rnd.pmf(n));
    const RandomVariable x = rnd.real_vector(n);
    RandomVariable y(n);
    for (Eigen::Index i = 0; i < n; ++i)
      y(i) = static_cast<double>(rnd.integer(3));
    std::map<double, double> g;
    for (double level : {0.0, 1.0, 2.0}) g[level] = rnd.normal();
    CHECK(defining_property_check(sp, x, y, g) <= 1e-12);
  }
}

TEST_CASE("tower identity") {
  const FiniteSampleSpace sp({"a", "b", "c"},
                             (RealVector(3) << 0.2, 0.3, 0.5).finished());
  RandomVariable x(3), y(3);
  x << 7, -2, 4;
  y << 1, 2, 3;
  CHECK(tower_check(sp, x, y, 2.0) == 0.0);  // injective Y

  const SpinPair pair = spin_pair(weights4(0.1, 0.2, 0.3, 0.4));
  CHECK(tower_check(pair.sp, pair.x, pair.y, 1.0) <= 1e-12);

  const SpinPair uniform = spin_pair(weights4(0.25, 0.25, 0.25, 0.25));
  CHECK(tower_check(uniform.sp, uniform.x, uniform.y, 1.0) <= 1e-12);

  CHECK_THROWS_AS(tower_check(pair.sp, pair.x, pair.y, 3.0),
                  ZeroProbabilityEvent);
}

TEST_CASE("total spin zero makes the opposite value certain") {
  RandomSource rnd(204);
  for (int trial = 0; trial < 50; ++trial) {
    // Admissible pmf: P(X+Y=0) > 0 and P(Y=1, X=-1) > 0.
    const RealVector w = 0.8 * rnd.pmf(4) + 0.05 * RealVector::Ones(4);
    const SpinPair pair = spin_pair(w);
    const Event zero_total = (pair.x.array() + pair.y.array()) == 0.0;
    const FiniteSampleSpace conditioned = condition(pair.sp, zero_total);
    const Event x_minus = pair.x.array() == -1.0;
    const Event y_plus = pair.y.array() == 1.0;
    const double joint = conditioned.probability(x_minus && y_plus);
    const double marginal = conditioned.probability(y_plus);
    CHECK(joint / marginal == 1.0);
  }
}

TEST_CASE("non-finite weights are rejected") {
  RealVector poisoned(2);
  poisoned << std::nan(""), 0.5;
  CHECK_THROWS_AS(FiniteSampleSpace({"a", "b"}, poisoned), InvalidConfig);
  poisoned << std::numeric_limits<double>::infinity(), 0.5;
  CHECK_THROWS_AS(FiniteSampleSpace({"a", "b"}, poisoned), InvalidConfig);
}
