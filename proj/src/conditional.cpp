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

#include "qpredict/conditional.hpp"

#include <cmath>

namespace qpredict {

namespace {

void require_dims(const DensityOperator& w, const Matrix& a,
                  const ProjectorFamily& fam) {
  if (a.rows() != w.dim() || a.cols() != w.dim())
    throw DimMismatch(w.dim(), a.rows());
  if (fam.dim() != w.dim()) throw DimMismatch(w.dim(), fam.dim());
}

/// Branch coefficients tr(W B_j X B_j)/tr(W B_j) for arbitrary X, complex
/// valued; masked 0 on branches with weight <= tol.
struct PinchCoeffs {
  Vector coeffs;
  BoolArray mask;
  RealVector weights;
};

PinchCoeffs pinch_coeffs(const DensityOperator& w, const Matrix& x,
                         const ProjectorFamily& fam, double tol) {
  PinchCoeffs out{Vector::Zero(fam.size()), BoolArray::Constant(fam.size(), false),
                  RealVector::Zero(fam.size())};
  bool any = false;
  for (Eigen::Index j = 0; j < fam.size(); ++j) {
    const double weight = trace_product(w.matrix(), fam[j]).real();
    out.weights(j) = weight;
    if (weight > tol) {
      out.coeffs(j) = trace_product(w.matrix(), fam[j] * x * fam[j]) / weight;
      out.mask(j) = true;
      any = true;
    }
  }
  if (!any) throw AllWeightsZero();
  return out;
}

}  // namespace

ConditionalExpectation conditional_expectation(const DensityOperator& w,
                                               const Matrix& a,
                                               const ProjectorFamily& fam,
                                               double tol) {
  require_dims(w, a, fam);
  if (!is_self_adjoint(a))
    throw NotSelfAdjoint(operator_norm(a - a.adjoint()));
  const PinchCoeffs pc = pinch_coeffs(w, a, fam, tol);
  return {fam, pc.coeffs.real(), pc.mask, pc.weights};
}

DensityOperator reduce_state(const DensityOperator& w, const Matrix& b,
                             double tol) {
  if (b.rows() != w.dim() || b.cols() != w.dim())
    throw DimMismatch(w.dim(), b.rows());
  if (!is_projector(b))
    throw NotProjector(0, "reduction requires a projector");
  const double weight = trace_product(w.matrix(), b).real();
  if (weight <= tol) throw ZeroProbabilityBranch(weight);
  return DensityOperator(b * w.matrix() * b / weight);
}

double posterior_expectation(const DensityOperator& w, const Matrix& a,
                             const ProjectorFamily& fam, Eigen::Index j,
                             double tol) {
  require_dims(w, a, fam);
  if (j < 0 || j >= fam.size()) throw DimMismatch(fam.size(), j);
  return expectation(reduce_state(w, fam[j], tol), a).real();
}

double defining_property_residual(const DensityOperator& w, const Matrix& a,
                                  const ProjectorFamily& fam,
                                  const std::vector<Eigen::Index>& subset) {
  require_dims(w, a, fam);
  if (subset.empty()) throw InvalidConfig("subset must be non-empty");
  const ConditionalExpectation cond = conditional_expectation(w, a, fam);
  const Matrix e = cond.synthesize();
  Matrix b_s = Matrix::Zero(fam.dim(), fam.dim());
  for (const Eigen::Index j : subset) {
    if (j < 0 || j >= fam.size()) throw DimMismatch(fam.size(), j);
    b_s += fam[j];
  }
  const Complex lhs = trace_product(w.matrix(), b_s * e * b_s);
  const Complex rhs = trace_product(w.matrix(), b_s * a * b_s);
  return std::abs(lhs - rhs);
}

double module_property_residual(const DensityOperator& w, const Matrix& a,
                                const ProjectorFamily& fam,
                                const Vector& coeffs) {
  require_dims(w, a, fam);
  const Matrix c = synthesize(fam, coeffs);
  const double tol = kValidationTol;
  const Matrix e_a = synthesize(fam, pinch_coeffs(w, a, fam, tol).coeffs);
  const Matrix e_ac = synthesize(fam, pinch_coeffs(w, a * c, fam, tol).coeffs);
  const Matrix e_ca = synthesize(fam, pinch_coeffs(w, c * a, fam, tol).coeffs);
  return std::max(operator_norm(e_ac - e_a * c), operator_norm(e_ca - c * e_a));
}

double projection_residual(const DensityOperator& w, const Matrix& a,
                           const ProjectorFamily& fam) {
  require_dims(w, a, fam);
  const ConditionalExpectation cond = conditional_expectation(w, a, fam);
  const Complex we = trace_product(w.matrix(), cond.synthesize());
  const Complex wa = trace_product(w.matrix(), a);
  return std::abs(we - wa);
}

RealVector least_squares_coeffs(const DensityOperator& w, const Matrix& a,
                                const ProjectorFamily& fam, double tol) {
  require_dims(w, a, fam);
  if (!is_self_adjoint(a))
    throw NotSelfAdjoint(operator_norm(a - a.adjoint()));
  RealVector coeffs = RealVector::Zero(fam.size());
  bool any = false;
  for (Eigen::Index j = 0; j < fam.size(); ++j) {
    const double weight = trace_product(w.matrix(), fam[j]).real();
    if (weight > tol) {
      // Orthogonality diagonalizes the quadratic: the objective splits per
      // coefficient as w_j c_j^2 - 2 c_j Re tr(W A B_j) + const.
      coeffs(j) = trace_product(w.matrix(), a * fam[j]).real() / weight;
      any = true;
    }
  }
  if (!any) throw AllWeightsZero();
  return coeffs;
}

double predictor_mse(const DensityOperator& w, const Matrix& a,
                     const ProjectorFamily& fam, const RealVector& coeffs) {
  require_dims(w, a, fam);
  const Matrix diff = a - synthesize(fam, coeffs);
  return trace_product(w.matrix(), diff * diff).real();
}

double pythagoras_residual(const DensityOperator& w, const Matrix& a,
                           const ProjectorFamily& fam,
                           const RealVector& coeffs) {
  require_dims(w, a, fam);
  const ConditionalExpectation cond = conditional_expectation(w, a, fam);
  const Matrix e_minus_c = cond.synthesize() - synthesize(fam, coeffs);
  const double cross = trace_product(w.matrix(), e_minus_c * e_minus_c).real();
  return std::abs(predictor_mse(w, a, fam, coeffs) -
                  predictor_mse(w, a, fam, cond.coeffs) - cross);
}

OptimalityReport optimality_report(const DensityOperator& w, const Matrix& a,
                                   const ProjectorFamily& fam) {
  OptimalityReport report;
  report.predictor_coeffs = conditional_expectation(w, a, fam).coeffs;
  report.least_squares = least_squares_coeffs(w, a, fam);
  report.mse_predictor = predictor_mse(w, a, fam, report.predictor_coeffs);
  report.mse_least_squares = predictor_mse(w, a, fam, report.least_squares);
  report.projection_residual = projection_residual(w, a, fam);
  report.pythagoras_residual =
      pythagoras_residual(w, a, fam, report.least_squares);
  return report;
}

}  // namespace qpredict
