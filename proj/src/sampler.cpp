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

#include "qpredict/sampler.hpp"

#include <cmath>
#include <optional>

namespace qpredict {

namespace {

RealVector born_probabilities(const DensityOperator& w,
                              const ProjectorFamily& fam) {
  if (fam.dim() != w.dim()) throw DimMismatch(w.dim(), fam.dim());
  if (!fam.is_complete()) throw IncompleteFamily(fam.completeness_defect());
  RealVector p(fam.size());
  for (Eigen::Index j = 0; j < fam.size(); ++j)
    p(j) = std::max(0.0, trace_product(w.matrix(), fam[j]).real());
  return p;
}

}  // namespace

Eigen::Index sample_index(const RealVector& probabilities, double u) {
  double cum = 0.0;
  Eigen::Index last_positive = -1;
  for (Eigen::Index j = 0; j < probabilities.size(); ++j) {
    if (probabilities(j) <= 0.0) continue;
    cum += probabilities(j);
    last_positive = j;
    if (u <= cum) return j;
  }
  if (last_positive < 0)
    throw InvalidConfig("cannot sample from an all-zero weight vector");
  return last_positive;  // u beyond the accumulated total (roundoff)
}

MeasurementRecord born_sample(const DensityOperator& w,
                              const ProjectorFamily& fam, SplitMix64& rng) {
  const RealVector p = born_probabilities(w, fam);
  const Eigen::Index outcome = sample_index(p, rng.next_double());
  return {outcome, w, reduce_state(w, fam[outcome])};
}

SampleReport run_experiment(const DensityOperator& initial,
                            const MeasurementPlan& plan, std::uint64_t shots,
                            std::uint64_t seed) {
  if (plan.stages.empty() || plan.stages.size() > 2)
    throw InvalidConfig("measurement plan must have one or two stages");
  if (shots < 1) throw InvalidConfig("shots must be >= 1");

  const RealVector p0 = born_probabilities(initial, plan.stages[0]);
  const Eigen::Index n0 = p0.size();
  const bool two_stage = plan.stages.size() == 2;
  const Eigen::Index n1 = two_stage ? plan.stages[1].size() : 1;

  // Branch tree: posterior states and stage-1 weights exist only for
  // reachable stage-0 outcomes.
  std::vector<std::optional<RealVector>> p1(static_cast<std::size_t>(n0));
  RealVector predicted = RealVector::Zero(n0 * n1);
  for (Eigen::Index j = 0; j < n0; ++j) {
    if (p0(j) <= 0.0) continue;
    if (two_stage) {
      const DensityOperator posterior =
          reduce_state(initial, plan.stages[0][j]);
      p1[static_cast<std::size_t>(j)] =
          born_probabilities(posterior, plan.stages[1]);
      for (Eigen::Index k = 0; k < n1; ++k)
        predicted(j * n1 + k) = p0(j) * (*p1[static_cast<std::size_t>(j)])(k);
    } else {
      predicted(j) = p0(j);
    }
  }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n0 * n1), 0);
  std::uint64_t violations = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    SplitMix64 stream = derive_stream(seed, s);
    const Eigen::Index j = sample_index(p0, stream.next_double());
    Eigen::Index flat = j;
    if (two_stage) {
      const Eigen::Index k =
          sample_index(*p1[static_cast<std::size_t>(j)], stream.next_double());
      flat = j * n1 + k;
      for (const auto& pair : plan.certainty)
        if (j == pair.given && k != pair.required) ++violations;
    }
    ++counts[static_cast<std::size_t>(flat)];
  }

  SampleReport report;
  report.shots = shots;
  report.seed = seed;
  report.counts = std::move(counts);
  report.predicted = std::move(predicted);
  report.certainty_violations = violations;
  report.outcome_labels.reserve(static_cast<std::size_t>(n0 * n1));
  for (Eigen::Index j = 0; j < n0; ++j) {
    for (Eigen::Index k = 0; k < n1; ++k) {
      std::string label = plan.labels.empty() ? std::to_string(j)
                                              : plan.labels[0][static_cast<std::size_t>(j)];
      if (two_stage) {
        label += ",";
        label += plan.labels.size() > 1
                     ? plan.labels[1][static_cast<std::size_t>(k)]
                     : std::to_string(k);
      }
      report.outcome_labels.push_back(std::move(label));
    }
  }
  report.frequencies = RealVector(n0 * n1);
  for (Eigen::Index i = 0; i < n0 * n1; ++i)
    report.frequencies(i) =
        static_cast<double>(report.counts[static_cast<std::size_t>(i)]) /
        static_cast<double>(shots);
  if (two_stage) {
    report.conditional_frequencies = RealVector::Zero(n0 * n1);
    report.conditional_predicted = RealVector::Zero(n0 * n1);
    for (Eigen::Index j = 0; j < n0; ++j) {
      std::uint64_t branch_total = 0;
      for (Eigen::Index k = 0; k < n1; ++k)
        branch_total += report.counts[static_cast<std::size_t>(j * n1 + k)];
      for (Eigen::Index k = 0; k < n1; ++k) {
        if (branch_total > 0)
          report.conditional_frequencies(j * n1 + k) =
              static_cast<double>(
                  report.counts[static_cast<std::size_t>(j * n1 + k)]) /
              static_cast<double>(branch_total);
        if (p1[static_cast<std::size_t>(j)])
          report.conditional_predicted(j * n1 + k) =
              (*p1[static_cast<std::size_t>(j)])(k);
      }
    }
  }
  const DeviationReport dev = deviation_report(report);
  report.max_abs_deviation = dev.max_abs_dev;
  report.within_bound = dev.within_bound;
  return report;
}

DeviationReport deviation_report(const SampleReport& report) {
  DeviationReport out;
  const auto n = report.predicted.size();
  const auto shots = static_cast<double>(report.shots);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = report.predicted(i);
    const double dev = std::abs(report.frequencies(i) - p);
    out.max_abs_dev = std::max(out.max_abs_dev, dev);
    const double bound = 4.0 * std::sqrt(p * (1.0 - p) / shots) + 1.0 / shots;
    if (dev > bound) out.within_bound = false;
  }
  return out;
}

}  // namespace qpredict
