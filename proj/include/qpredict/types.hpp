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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qpredict {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

/// Tolerance for validation predicates: self-adjointness, positivity,
/// projector checks, branch-weight thresholds.
inline constexpr double kValidationTol = 1e-10;

/// Tolerance for algebraic identities that hold exactly in exact
/// arithmetic at the dimensions handled here (<= 16).
inline constexpr double kAlgebraTol = 1e-12;

/// Tolerance for probability-vector normalization (classical weights,
/// amplitude normalization |a|^2 + |b|^2 = 1).
inline constexpr double kProbabilityTol = 1e-12;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimMismatch : public Error {
 public:
  DimMismatch(Eigen::Index expected, Eigen::Index got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(double squared_norm)
      : Error("vector is not normalized: |psi|^2 = " +
              std::to_string(squared_norm)) {}
};

class NotSelfAdjoint : public Error {
 public:
  explicit NotSelfAdjoint(double defect)
      : Error("operator is not self-adjoint: |A - A*| = " +
              std::to_string(defect)) {}
};

class NotDensityOperator : public Error {
 public:
  explicit NotDensityOperator(const std::string& what) : Error(what) {}
};

class NotProjector : public Error {
 public:
  NotProjector(int index, const std::string& reason)
      : Error("operator " + std::to_string(index) +
              " is not a projector: " + reason),
        index(index) {}
  int index;
};

class NotOrthogonal : public Error {
 public:
  NotOrthogonal(int j, int k, double norm)
      : Error("projectors " + std::to_string(j) + " and " + std::to_string(k) +
              " are not orthogonal: |B_j B_k| = " + std::to_string(norm)),
        first(j),
        second(k) {}
  int first;
  int second;
};

class NotInAlgebra : public Error {
 public:
  explicit NotInAlgebra(double residual)
      : Error("operator is not in the generated algebra: residual = " +
              std::to_string(residual)),
        residual(residual) {}
  double residual;
};

class ZeroProbabilityEvent : public Error {
 public:
  ZeroProbabilityEvent() : Error("cannot condition on a null event") {}
};

class ZeroProbabilityBranch : public Error {
 public:
  explicit ZeroProbabilityBranch(double weight)
      : Error("measurement branch has zero weight: tr(WB) = " +
              std::to_string(weight)) {}
};

class AllWeightsZero : public Error {
 public:
  AllWeightsZero()
      : Error("every projector in the family has zero weight under W") {}
};

class MissingLevel : public Error {
 public:
  explicit MissingLevel(double level)
      : Error("predictor is undefined on observed level y = " +
              std::to_string(level)),
        level(level) {}
  double level;
};

class IncompleteFamily : public Error {
 public:
  explicit IncompleteFamily(double defect)
      : Error("projector family does not resolve the identity: "
              "|I - sum B_j| = " +
              std::to_string(defect)),
        defect(defect) {}
  double defect;
};

class NonPositiveTime : public Error {
 public:
  explicit NonPositiveTime(double t)
      : Error("propagation time must be positive, got t = " +
              std::to_string(t)) {}
};

class NonPositiveEnergy : public Error {
 public:
  explicit NonPositiveEnergy(double e)
      : Error("energy must be positive, got E = " + std::to_string(e)) {}
};

class CoincidentPoints : public Error {
 public:
  CoincidentPoints()
      : Error("stationary-wave amplitude is singular at coincident points") {}
};

class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& what) : Error(what) {}
};

}  // namespace qpredict
