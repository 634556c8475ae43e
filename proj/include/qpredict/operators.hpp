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

/// Exact small-dimension complex operator arithmetic: kets, observables,
/// density operators, tensor products, variances and the uncertainty
/// inequality.

#pragma once

#include <unsupported/Eigen/KroneckerProduct>

#include "qpredict/types.hpp"

namespace qpredict {

/// tr(XY) without forming the product: sum_ij X_ij Y_ji.
template <typename DerivedX, typename DerivedY>
Complex trace_product(const Eigen::MatrixBase<DerivedX>& x,
                      const Eigen::MatrixBase<DerivedY>& y) {
  return x.cwiseProduct(y.transpose()).sum();
}

/// Largest singular value. Standard, dimension-free meaning for tolerances.
double operator_norm(const Matrix& a);

Matrix commutator(const Matrix& a, const Matrix& b);

bool is_normalized(const Vector& psi, double tol = kValidationTol);
bool is_self_adjoint(const Matrix& a, double tol = kValidationTol);
bool is_projector(const Matrix& b, double tol = kValidationTol);

/// Outer product |psi><psi| of a normalized ket. Rank-1 projector.
Matrix dyad(const Vector& psi);

/// Kronecker product, first factor = subsystem 1.
template <typename DerivedA, typename DerivedB>
Matrix tensor(const Eigen::MatrixBase<DerivedA>& a,
              const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a, b);
}

/// Positive, self-adjoint, unit-trace operator; induces the state
/// functional w(A) = tr(WA). All three invariants are checked at
/// construction.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix w, double tol = kValidationTol);

  /// W = |psi><psi| for a normalized ket.
  static DensityOperator pure(const Vector& psi);

  /// Maximally mixed state I/dim.
  static DensityOperator maximally_mixed(Eigen::Index dim);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  Matrix mat_;
};

/// w(A) = tr(WA). Real within kAlgebraTol whenever A is self-adjoint.
Complex expectation(const DensityOperator& w, const Matrix& a);

/// <psi,(A - <psi,A psi>)^2 psi>, the predicted squared measurement error
/// of A in the state psi. Requires psi normalized and A self-adjoint.
double variance(const Vector& psi, const Matrix& a);

struct UncertaintyCheck {
  double lhs;  // sigma(A) sigma(B)
  double rhs;  // |<psi, C psi>| / 2 with C = -i[A, B]
  bool satisfied;
};

/// sigma(A) sigma(B) >= |<psi,C psi>|/2 with [A,B] = iC. `satisfied` uses
/// lhs >= rhs - kAlgebraTol.
UncertaintyCheck uncertainty_check(const Vector& psi, const Matrix& a,
                                   const Matrix& b);

}  // namespace qpredict
