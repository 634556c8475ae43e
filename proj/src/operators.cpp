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

#include "qpredict/operators.hpp"

#include <cmath>

namespace qpredict {

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimMismatch(a.rows(), b.rows());
  return a * b - b * a;
}

bool is_normalized(const Vector& psi, double tol) {
  return std::abs(psi.squaredNorm() - 1.0) <= tol;
}

bool is_self_adjoint(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return operator_norm(a - a.adjoint()) <= tol;
}

bool is_projector(const Matrix& b, double tol) {
  if (!is_self_adjoint(b, tol)) return false;
  return operator_norm(b * b - b) <= tol;
}

Matrix dyad(const Vector& psi) {
  const double sq = psi.squaredNorm();
  if (!(std::abs(sq - 1.0) <= kValidationTol)) throw NotNormalized(sq);
  return psi * psi.adjoint();
}

DensityOperator::DensityOperator(Matrix w, double tol) : mat_(std::move(w)) {
  if (mat_.rows() != mat_.cols()) throw DimMismatch(mat_.rows(), mat_.cols());
  if (mat_.rows() == 0)
    throw NotDensityOperator("density operator must have positive dimension");
  if (!mat_.allFinite())
    throw NotDensityOperator("density operator entries must be finite");
  const double sa_defect = operator_norm(mat_ - mat_.adjoint());
  if (sa_defect > tol)
    throw NotDensityOperator("density operator is not self-adjoint: |W - W*| = " +
                             std::to_string(sa_defect));
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol)
    throw NotDensityOperator("density operator does not have unit trace: tr(W) = " +
                             std::to_string(tr.real()));
  // Dims are tiny; an exact spectral check is cheap.
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mat_ + mat_.adjoint()),
                                           Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol)
    throw NotDensityOperator("density operator is not positive: min eigenvalue = " +
                             std::to_string(min_ev));
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  return DensityOperator(dyad(psi));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return DensityOperator(Matrix::Identity(dim, dim) /
                         static_cast<double>(dim));
}

Complex expectation(const DensityOperator& w, const Matrix& a) {
  if (a.rows() != w.dim() || a.cols() != w.dim())
    throw DimMismatch(w.dim(), a.rows());
  return trace_product(w.matrix(), a);
}

double variance(const Vector& psi, const Matrix& a) {
  if (a.rows() != psi.size()) throw DimMismatch(psi.size(), a.rows());
  if (!is_normalized(psi)) throw NotNormalized(psi.squaredNorm());
  if (!is_self_adjoint(a)) throw NotSelfAdjoint(operator_norm(a - a.adjoint()));
  const double mean = psi.dot(a * psi).real();
  // <psi,(A-m)^2 psi> = |(A-m) psi|^2 for self-adjoint A.
  return (a * psi - mean * psi).squaredNorm();
}

UncertaintyCheck uncertainty_check(const Vector& psi, const Matrix& a,
                                   const Matrix& b) {
  if (!is_self_adjoint(a)) throw NotSelfAdjoint(operator_norm(a - a.adjoint()));
  if (!is_self_adjoint(b)) throw NotSelfAdjoint(operator_norm(b - b.adjoint()));
  const double lhs = std::sqrt(variance(psi, a)) * std::sqrt(variance(psi, b));
  // [A,B] = iC  =>  C = -i[A,B], self-adjoint for self-adjoint A, B.
  const Matrix c = Complex(0.0, -1.0) * commutator(a, b);
  const double rhs = 0.5 * std::abs(psi.dot(c * psi));
  return {lhs, rhs, lhs >= rhs - kAlgebraTol};
}

}  // namespace qpredict
