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

#include "qpredict/random.hpp"

#include <cmath>
#include <numbers>

namespace qpredict {

std::uint64_t RandomSource::integer(std::uint64_t bound) {
  return bound == 0 ? 0 : gen_.next() % bound;
}

double RandomSource::normal() {
  const double u1 = 1.0 - gen_.next_double();  // (0, 1]
  const double u2 = gen_.next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

RealVector RandomSource::real_vector(Eigen::Index n) {
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Vector RandomSource::complex_vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_normal();
  return v;
}

Vector RandomSource::ket(Eigen::Index dim) {
  Vector psi = complex_vector(dim);
  return psi / psi.norm();
}

Matrix RandomSource::hermitian(Eigen::Index dim) {
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = complex_normal();
  return 0.5 * (g + g.adjoint());
}

Matrix RandomSource::unitary(Eigen::Index dim) {
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = complex_normal();
  return Eigen::HouseholderQR<Matrix>(g).householderQ();
}

DensityOperator RandomSource::density(Eigen::Index dim) {
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = complex_normal();
  Matrix w = g * g.adjoint();
  return DensityOperator(w / w.trace().real());
}

ProjectorFamily RandomSource::rank1_family(Eigen::Index dim) {
  const Matrix q = unitary(dim);
  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j)
    projectors.push_back(q.col(j) * q.col(j).adjoint());
  return ProjectorFamily(std::move(projectors));
}

ProjectorFamily RandomSource::block_family(Eigen::Index dim,
                                           Eigen::Index blocks) {
  if (blocks < 1 || blocks > dim)
    throw InvalidConfig("block count must be in [1, dim]");
  // Random composition of dim into `blocks` parts, each >= 1.
  std::vector<Eigen::Index> sizes(static_cast<std::size_t>(blocks), 1);
  for (Eigen::Index extra = dim - blocks; extra > 0; --extra)
    ++sizes[static_cast<std::size_t>(
        integer(static_cast<std::uint64_t>(blocks)))];
  const Matrix q = unitary(dim);
  std::vector<Matrix> projectors;
  Eigen::Index start = 0;
  for (const Eigen::Index sz : sizes) {
    const auto cols = q.middleCols(start, sz);
    projectors.push_back(cols * cols.adjoint());
    start += sz;
  }
  return ProjectorFamily(std::move(projectors));
}

RealVector RandomSource::pmf(Eigen::Index n) {
  RealVector w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = -std::log(1.0 - uniform());
  w /= w.sum();
  // Absorb the normalization roundoff into the largest entry.
  Eigen::Index top;
  w.maxCoeff(&top);
  w(top) += 1.0 - w.sum();
  return w;
}

DensityOperator commuting_density(const ProjectorFamily& fam,
                                  RandomSource& rnd, double mix) {
  if (!fam.is_complete())
    throw IncompleteFamily(fam.completeness_defect());  // pinch loses trace
  const Eigen::Index d = fam.dim();
  const Matrix base = (1.0 - mix) * rnd.density(d).matrix() +
                      mix * Matrix::Identity(d, d) / static_cast<double>(d);
  return DensityOperator(pinch(fam, base));
}

}  // namespace qpredict
