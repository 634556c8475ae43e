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

/// Non-commutative conditional expectation as a prediction operator:
/// branch-wise posterior coefficients, state reduction after measurement,
/// and quantitative diagnostics for the best-predictor property.

#pragma once

#include <vector>

#include "qpredict/algebra.hpp"
#include "qpredict/operators.hpp"
#include "qpredict/types.hpp"

namespace qpredict {

/// The predictor of A given the measurement algebra generated by a
/// projector family: sum_j e_j B_j with e_j = tr(W B_j A B_j)/tr(W B_j).
/// Branches with weight tr(W B_j) <= tol are masked with coefficient 0,
/// matching the classical null-set convention.
struct ConditionalExpectation {
  ProjectorFamily family;
  RealVector coeffs;   // e_j; masked entries are 0
  BoolArray mask;      // true iff tr(W B_j) > tol
  RealVector weights;  // tr(W B_j)

  Matrix synthesize() const { return qpredict::synthesize(family, coeffs); }
};

/// Branch coefficients of the predictor of a self-adjoint A under W.
/// Throws AllWeightsZero when every branch weight is below tol.
ConditionalExpectation conditional_expectation(const DensityOperator& w,
                                               const Matrix& a,
                                               const ProjectorFamily& fam,
                                               double tol = kValidationTol);

/// Post-measurement state update W -> B W B / tr(W B) upon observing the
/// projector B.
DensityOperator reduce_state(const DensityOperator& w, const Matrix& b,
                             double tol = kValidationTol);

/// Expected value of A in the reduced state of branch j; equals the
/// branch coefficient e_j.
double posterior_expectation(const DensityOperator& w, const Matrix& a,
                             const ProjectorFamily& fam, Eigen::Index j,
                             double tol = kValidationTol);

/// |w(B_S E B_S) - w(B_S A B_S)| with B_S = sum_{j in S} B_j and E the
/// synthesized predictor. Zero on singletons by construction; on compound
/// subsets it equals the cross-term magnitude |sum_{j!=k in S} tr(W B_j A B_k)|.
double defining_property_residual(const DensityOperator& w, const Matrix& a,
                                  const ProjectorFamily& fam,
                                  const std::vector<Eigen::Index>& subset);

/// Bimodule check: max of |E[AC|B] - E[A|B] C| and |E[CA|B] - C E[A|B]|
/// in operator norm, for C synthesized from the given coefficients. An
/// operator identity for orthogonal-projector families.
double module_property_residual(const DensityOperator& w, const Matrix& a,
                                const ProjectorFamily& fam,
                                const Vector& coeffs);

/// |w(E) - w(A)|, the expectation-preservation defect of the predictor.
/// Vanishes whenever W commutes with every projector of the family.
double projection_residual(const DensityOperator& w, const Matrix& a,
                           const ProjectorFamily& fam);

/// Exact minimizer over real coefficient vectors of tr(W (A - sum c_j B_j)^2):
/// c_j = Re(tr(W A B_j)) / tr(W B_j). Zero-weight branches are masked 0;
/// their coefficient does not enter the objective.
RealVector least_squares_coeffs(const DensityOperator& w, const Matrix& a,
                                const ProjectorFamily& fam,
                                double tol = kValidationTol);

/// tr(W (A - C)^2) with C synthesized from the coefficients.
double predictor_mse(const DensityOperator& w, const Matrix& a,
                     const ProjectorFamily& fam, const RealVector& coeffs);

/// |mse(c) - mse(e) - tr(W (E - C)^2)| with e the branch coefficients:
/// the defect of the Pythagorean split of the prediction error. Vanishes
/// in the commuting regime [W, B_j] = 0.
double pythagoras_residual(const DensityOperator& w, const Matrix& a,
                           const ProjectorFamily& fam,
                           const RealVector& coeffs);

/// Side-by-side comparison of the branch-coefficient predictor and the
/// least-squares optimum, with the two diagnostics evaluated at the
/// least-squares predictor.
struct OptimalityReport {
  RealVector predictor_coeffs;           // branch coefficients e_j
  RealVector least_squares;       // closed-form minimizer
  double mse_predictor = 0.0;            // tr(W (A - E)^2)
  double mse_least_squares = 0.0; // tr(W (A - C_ls)^2)
  double projection_residual = 0.0;
  double pythagoras_residual = 0.0;  // at C = least-squares predictor
};

OptimalityReport optimality_report(const DensityOperator& w, const Matrix& a,
                                   const ProjectorFamily& fam);

}  // namespace qpredict
