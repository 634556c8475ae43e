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

/// Deterministic random instances for property sweeps: kets, Hermitian
/// observables, density operators, unitaries, projector families, pmfs.
/// Built on SplitMix64 so transcripts are identical across platforms.

#pragma once

#include <vector>

#include "qpredict/algebra.hpp"
#include "qpredict/operators.hpp"
#include "qpredict/rng.hpp"

namespace qpredict {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return gen_.next_double(); }
  std::uint64_t integer(std::uint64_t bound);  // uniform in [0, bound)
  double normal();                             // Box-Muller
  Complex complex_normal();

  RealVector real_vector(Eigen::Index n);
  Vector complex_vector(Eigen::Index n);

  /// Normalized random ket (Haar direction).
  Vector ket(Eigen::Index dim);

  /// (G + G*)/2 with Gaussian G.
  Matrix hermitian(Eigen::Index dim);

  /// Unitary from the QR factorization of a Gaussian matrix.
  Matrix unitary(Eigen::Index dim);

  /// Full-rank random state G G* / tr(G G*).
  DensityOperator density(Eigen::Index dim);

  /// Complete rank-1 family |q_j><q_j| from a random unitary.
  ProjectorFamily rank1_family(Eigen::Index dim);

  /// Complete family of `blocks` projectors with random ranks >= 1, built
  /// from a random unitary's column groups.
  ProjectorFamily block_family(Eigen::Index dim, Eigen::Index blocks);

  /// Probability vector with strictly positive entries.
  RealVector pmf(Eigen::Index n);

 private:
  SplitMix64 gen_;
};

/// State commuting with every projector of the family, with every branch
/// weight at least min_weight/dim: the pinch of a random state mixed with
/// the maximally mixed one.
DensityOperator commuting_density(const ProjectorFamily& fam,
                                  RandomSource& rnd, double mix = 0.5);

}  // namespace qpredict
