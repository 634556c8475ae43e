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

#include "qpredict/algebra.hpp"

#include <cmath>
#include <utility>

namespace qpredict {

ProjectorFamily::ProjectorFamily(std::vector<Matrix> projectors, double tol)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty())
    throw InvalidConfig("projector family must not be empty");
  const Eigen::Index d = projectors_.front().rows();
  for (std::size_t j = 0; j < projectors_.size(); ++j) {
    const Matrix& b = projectors_[j];
    if (b.rows() != d || b.cols() != d) throw DimMismatch(d, b.rows());
    if (!b.allFinite())
      throw NotProjector(static_cast<int>(j), "entries must be finite");
    const double sa = operator_norm(b - b.adjoint());
    if (sa > tol)
      throw NotProjector(static_cast<int>(j),
                         "|B - B*| = " + std::to_string(sa));
    const double idem = operator_norm(b * b - b);
    if (idem > tol)
      throw NotProjector(static_cast<int>(j),
                         "|B^2 - B| = " + std::to_string(idem));
    if (b.trace().real() < 0.5)
      throw NotProjector(static_cast<int>(j), "zero projector");
  }
  for (std::size_t j = 0; j < projectors_.size(); ++j) {
    for (std::size_t k = j + 1; k < projectors_.size(); ++k) {
      const double cross = operator_norm(projectors_[j] * projectors_[k]);
      if (cross > tol)
        throw NotOrthogonal(static_cast<int>(j), static_cast<int>(k), cross);
    }
  }
  Matrix total = Matrix::Zero(d, d);
  for (const Matrix& b : projectors_) total += b;
  completeness_defect_ = operator_norm(Matrix::Identity(d, d) - total);
}

RealVector ProjectorFamily::ranks() const {
  RealVector r(size());
  for (Eigen::Index j = 0; j < size(); ++j)
    r(j) = projectors_[static_cast<std::size_t>(j)].trace().real();
  return r;
}

ProjectorFamily basis_family(Eigen::Index dim) {
  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j) {
    Matrix b = Matrix::Zero(dim, dim);
    b(j, j) = 1.0;
    projectors.push_back(std::move(b));
  }
  return ProjectorFamily(std::move(projectors));
}

namespace {

template <typename Coeffs>
Matrix synthesize_impl(const ProjectorFamily& fam, const Coeffs& coeffs) {
  if (coeffs.size() != fam.size()) throw DimMismatch(fam.size(), coeffs.size());
  Matrix c = Matrix::Zero(fam.dim(), fam.dim());
  for (Eigen::Index j = 0; j < fam.size(); ++j) c += coeffs(j) * fam[j];
  return c;
}

}  // namespace

Matrix synthesize(const ProjectorFamily& fam, const Vector& coeffs) {
  return synthesize_impl(fam, coeffs);
}

Matrix synthesize(const ProjectorFamily& fam, const RealVector& coeffs) {
  return synthesize_impl(fam, coeffs);
}

Matrix pinch(const ProjectorFamily& fam, const Matrix& a) {
  if (a.rows() != fam.dim() || a.cols() != fam.dim())
    throw DimMismatch(fam.dim(), a.rows());
  Matrix out = Matrix::Zero(fam.dim(), fam.dim());
  for (Eigen::Index j = 0; j < fam.size(); ++j) out += fam[j] * a * fam[j];
  return out;
}

Vector decompose(const ProjectorFamily& fam, const Matrix& c, double tol) {
  if (c.rows() != fam.dim() || c.cols() != fam.dim())
    throw DimMismatch(fam.dim(), c.rows());
  const double pinch_residual = operator_norm(c - pinch(fam, c));
  if (pinch_residual > tol) throw NotInAlgebra(pinch_residual);
  Vector coeffs(fam.size());
  for (Eigen::Index j = 0; j < fam.size(); ++j) {
    const Matrix block = fam[j] * c * fam[j];
    const Complex cj = block.trace() / fam[j].trace();
    const double scalar_residual = operator_norm(block - cj * fam[j]);
    if (scalar_residual > tol) throw NotInAlgebra(scalar_residual);
    coeffs(j) = cj;
  }
  return coeffs;
}

}  // namespace qpredict
