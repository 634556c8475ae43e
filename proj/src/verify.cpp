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

#include "qpredict/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qpredict/classical.hpp"
#include "qpredict/conditional.hpp"
#include "qpredict/random.hpp"

namespace qpredict {

namespace {

struct SuiteContext {
  const VerifyOptions& opt;
  RandomSource rnd;

  Eigen::Index dim(int trial) const {
    const int span = opt.max_dim - opt.min_dim + 1;
    return opt.min_dim + (trial % span);
  }
};

SuiteResult pinching_identity(SuiteContext& ctx) {
  SuiteResult result{"pinching-identity", true, 0.0, ctx.opt.trials};
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index d = ctx.dim(trial);
    const ProjectorFamily fam = ctx.rnd.rank1_family(d);
    const Matrix a = ctx.rnd.hermitian(d);
    const DensityOperator w1 = commuting_density(fam, ctx.rnd);
    const DensityOperator w2 = ctx.rnd.density(d);
    const RealVector e1 = conditional_expectation(w1, a, fam).coeffs;
    const RealVector e2 = conditional_expectation(w2, a, fam).coeffs;
    for (Eigen::Index j = 0; j < fam.size(); ++j) {
      const double diag = trace_product(fam[j], a).real();
      result.worst = std::max(result.worst, std::abs(e1(j) - diag));
      result.worst = std::max(result.worst, std::abs(e2(j) - diag));
    }
  }
  result.passed = result.worst <= ctx.opt.tol;
  return result;
}

SuiteResult bimodule_identity(SuiteContext& ctx) {
  SuiteResult result{"bimodule-identity", true, 0.0, ctx.opt.trials};
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index d = ctx.dim(trial);
    const Eigen::Index blocks =
        1 + static_cast<Eigen::Index>(ctx.rnd.integer(
                static_cast<std::uint64_t>(d)));
    const ProjectorFamily fam = ctx.rnd.block_family(d, blocks);
    const DensityOperator w = commuting_density(fam, ctx.rnd, 0.25);
    const Matrix a = ctx.rnd.hermitian(d);
    const Vector c = ctx.rnd.complex_vector(fam.size());
    result.worst =
        std::max(result.worst, module_property_residual(w, a, fam, c));
    // Also on a generic non-commuting state.
    result.worst = std::max(
        result.worst, module_property_residual(ctx.rnd.density(d), a, fam, c));
  }
  result.passed = result.worst <= ctx.opt.tol;
  return result;
}

SuiteResult commuting_regime(SuiteContext& ctx) {
  SuiteResult result{"commuting-regime", true, 0.0, ctx.opt.trials};
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index d = ctx.dim(trial);
    const ProjectorFamily fam = ctx.rnd.rank1_family(d);
    const DensityOperator w = commuting_density(fam, ctx.rnd);
    const Matrix a = ctx.rnd.hermitian(d);
    const RealVector eq = conditional_expectation(w, a, fam).coeffs;
    const RealVector ls = least_squares_coeffs(w, a, fam);
    result.worst =
        std::max(result.worst, (eq - ls).cwiseAbs().maxCoeff());
    result.worst = std::max(result.worst, projection_residual(w, a, fam));
    result.worst = std::max(
        result.worst,
        pythagoras_residual(w, a, fam, ctx.rnd.real_vector(fam.size())));
  }
  result.passed = result.worst <= 100.0 * ctx.opt.tol;
  return result;
}

SuiteResult defining_property(SuiteContext& ctx) {
  SuiteResult result{"defining-property", true, 0.0, ctx.opt.trials};
  double worst_singleton = 0.0;
  double worst_compound = 0.0;
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index d = std::max<Eigen::Index>(ctx.dim(trial), 3);
    const ProjectorFamily fam = ctx.rnd.rank1_family(d);
    const DensityOperator w = ctx.rnd.density(d);
    const Matrix a = ctx.rnd.hermitian(d);
    for (Eigen::Index j = 0; j < fam.size(); ++j)
      worst_singleton = std::max(
          worst_singleton, defining_property_residual(w, a, fam, {j}));
    // Compound subset: residual must match the analytic cross term.
    std::vector<Eigen::Index> subset;
    for (Eigen::Index j = 0; j < fam.size(); ++j)
      if (ctx.rnd.uniform() < 0.5) subset.push_back(j);
    if (subset.size() < 2) subset = {0, 1};
    Complex cross = 0.0;
    for (const Eigen::Index j : subset)
      for (const Eigen::Index k : subset)
        if (j != k)
          cross += trace_product(w.matrix(), fam[j] * a * fam[k]);
    const double residual = defining_property_residual(w, a, fam, subset);
    worst_compound =
        std::max(worst_compound, std::abs(residual - std::abs(cross)));
  }
  result.worst = std::max(worst_singleton, worst_compound / 100.0);
  result.passed =
      worst_singleton <= ctx.opt.tol && worst_compound <= 100.0 * ctx.opt.tol;
  return result;
}

SuiteResult uncertainty_sweep(SuiteContext& ctx) {
  SuiteResult result{"uncertainty", true, 0.0, ctx.opt.trials};
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index d = ctx.dim(trial);
    const UncertaintyCheck check = uncertainty_check(
        ctx.rnd.ket(d), ctx.rnd.hermitian(d), ctx.rnd.hermitian(d));
    result.worst = std::max(result.worst, check.rhs - check.lhs);
    if (!check.satisfied) result.passed = false;
  }
  return result;
}

SuiteResult classical_identities(SuiteContext& ctx) {
  SuiteResult result{"classical-identities", true, 0.0, ctx.opt.trials};
  using classical::FiniteSampleSpace;
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(ctx.rnd.integer(7));
    std::vector<std::string> labels;
    for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    const FiniteSampleSpace sp(labels, ctx.rnd.pmf(n));
    const classical::RandomVariable x = ctx.rnd.real_vector(n);
    classical::RandomVariable y(n);
    for (Eigen::Index i = 0; i < n; ++i)
      y(i) = static_cast<double>(ctx.rnd.integer(3));

    const classical::ConditionalRV cond = classical::cond_expect(sp, x, y);
    std::map<double, double> g;
    std::map<double, double> phi;
    for (const double level : cond.levels) {
      g[level] = ctx.rnd.normal();
      phi[level] = ctx.rnd.normal();
    }
    result.worst = std::max(result.worst,
                            classical::defining_property_check(sp, x, y, g));
    for (std::size_t j = 0; j < cond.levels.size(); ++j)
      if (cond.observed(static_cast<Eigen::Index>(j)))
        result.worst = std::max(
            result.worst, classical::tower_check(sp, x, y, cond.levels[j]));
    result.worst = std::max(
        result.worst, -classical::best_predictor_gap(sp, x, y, phi));

    // Spin pair: conditioned on zero total spin, observing one side makes
    // the other certain -- identically, for every admissible pmf.
    const FiniteSampleSpace pair(
        {"+1,+1", "+1,-1", "-1,+1", "-1,-1"},
        0.8 * ctx.rnd.pmf(4) + 0.05 * RealVector::Ones(4));
    classical::RandomVariable xs(4), ys(4);
    xs << 1, 1, -1, -1;
    ys << 1, -1, 1, -1;
    const classical::Event zero_total = (xs.array() + ys.array()) == 0.0;
    const FiniteSampleSpace conditioned = classical::condition(pair, zero_total);
    const classical::Event x_minus = xs.array() == -1.0;
    const classical::Event y_plus = ys.array() == 1.0;
    const double p_joint = conditioned.probability(x_minus && y_plus);
    const double p_ref = conditioned.probability(y_plus);
    if (p_joint != p_ref) result.passed = false;

    // Conditioning is exactly idempotent.
    const FiniteSampleSpace twice = classical::condition(conditioned, zero_total);
    if ((twice.weights().array() != conditioned.weights().array()).any())
      result.passed = false;
  }
  if (result.worst > ctx.opt.tol) result.passed = false;
  return result;
}

SuiteResult least_squares_argmin(SuiteContext& ctx) {
  SuiteResult result{"least-squares-argmin", true, 0.0, ctx.opt.trials};
  for (int trial = 0; trial < ctx.opt.trials; ++trial) {
    const Eigen::Index d = ctx.dim(trial);
    const Eigen::Index blocks =
        1 + static_cast<Eigen::Index>(ctx.rnd.integer(
                static_cast<std::uint64_t>(d)));
    const ProjectorFamily fam = ctx.rnd.block_family(d, blocks);
    const DensityOperator w = commuting_density(fam, ctx.rnd, 0.25);
    const Matrix a = ctx.rnd.hermitian(d);
    const RealVector ls = least_squares_coeffs(w, a, fam);
    const double mse_ls = predictor_mse(w, a, fam, ls);
    for (int k = 0; k < 20; ++k) {
      const double mse_c =
          predictor_mse(w, a, fam, ls + ctx.rnd.real_vector(fam.size()));
      result.worst = std::max(result.worst, mse_ls - mse_c);
    }
  }
  result.passed = result.worst <= ctx.opt.tol;
  return result;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options) {
  if (options.min_dim < 2 || options.max_dim > 16 ||
      options.min_dim > options.max_dim)
    throw InvalidConfig("verify dims must satisfy 2 <= min <= max <= 16");
  if (options.trials < 1) throw InvalidConfig("trials must be >= 1");

  SuiteContext ctx{options, RandomSource(options.seed)};
  VerifyResult result;
  result.suites.push_back(pinching_identity(ctx));
  result.suites.push_back(bimodule_identity(ctx));
  result.suites.push_back(commuting_regime(ctx));
  result.suites.push_back(defining_property(ctx));
  result.suites.push_back(uncertainty_sweep(ctx));
  result.suites.push_back(classical_identities(ctx));
  result.suites.push_back(least_squares_argmin(ctx));
  for (const SuiteResult& suite : result.suites) {
    if (!suite.passed && result.first_failure.empty())
      result.first_failure = suite.name;
    result.passed = result.passed && suite.passed;
  }
  return result;
}

}  // namespace qpredict
