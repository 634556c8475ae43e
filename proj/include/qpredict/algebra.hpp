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

/// The measurement algebra: a commutative algebra generated by a family of
/// mutually orthogonal self-adjoint projectors, with synthesis and
/// membership decomposition.

#pragma once

#include <vector>

#include "qpredict/operators.hpp"
#include "qpredict/types.hpp"

namespace qpredict {

/// Ordered list of pairwise-orthogonal nonzero projectors on a common
/// space. Families need not be complete (sum B_j = I is optional);
/// operations that require completeness state it as a precondition.
class ProjectorFamily {
 public:
  explicit ProjectorFamily(std::vector<Matrix> projectors,
                           double tol = kValidationTol);

  Eigen::Index dim() const { return projectors_.front().rows(); }
  Eigen::Index size() const {
    return static_cast<Eigen::Index>(projectors_.size());
  }
  const Matrix& operator[](Eigen::Index j) const {
    return projectors_[static_cast<std::size_t>(j)];
  }
  const std::vector<Matrix>& projectors() const { return projectors_; }

  /// |I - sum B_j| in operator norm; 0 iff the family resolves the
  /// identity.
  double completeness_defect() const { return completeness_defect_; }
  bool is_complete(double tol = kValidationTol) const {
    return completeness_defect_ <= tol;
  }

  /// Sum of the (real, nonnegative) ranks tr(B_j).
  RealVector ranks() const;

 private:
  std::vector<Matrix> projectors_;
  double completeness_defect_ = 0.0;
};

/// The rank-1 family {|j><j|} of computational-basis projectors.
ProjectorFamily basis_family(Eigen::Index dim);

/// sum_j c_j B_j.
Matrix synthesize(const ProjectorFamily& fam, const Vector& coeffs);
Matrix synthesize(const ProjectorFamily& fam, const RealVector& coeffs);

/// A -> sum_j B_j A B_j; erases coherences between the blocks of the
/// family.
Matrix pinch(const ProjectorFamily& fam, const Matrix& a);

/// Membership test and coefficient extraction: c_j = tr(B_j C B_j)/tr(B_j)
/// iff C survives pinching and every block B_j C B_j is a scalar multiple
/// of B_j; throws NotInAlgebra with the offending residual otherwise.
Vector decompose(const ProjectorFamily& fam, const Matrix& c,
                 double tol = kValidationTol);

}  // namespace qpredict
