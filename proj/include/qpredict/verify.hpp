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

/// Randomized verification sweeps over the library's structural
/// identities, runnable from the CLI.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpredict {

struct VerifyOptions {
  int min_dim = 2;
  int max_dim = 8;
  int trials = 100;          // per suite
  std::uint64_t seed = 20260809;
  double tol = 1e-12;        // exact identities; regime checks use 100x
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;  // largest residual observed (or bound violation)
  int trials = 0;
};

struct VerifyResult {
  bool passed = true;
  std::vector<SuiteResult> suites;
  std::string first_failure;  // empty when passed
};

/// Runs every property suite: pinching identity, bimodule identity,
/// commuting-regime optimality, defining property on singleton and
/// compound subsets, uncertainty sweep, classical prediction identities,
/// least-squares argmin comparison.
VerifyResult run_verify(const VerifyOptions& options);

}  // namespace qpredict
