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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qpredict/algebra.hpp"
#include "qpredict/random.hpp"
#include "support/test_helpers.hpp"

using namespace qpredict;
using namespace qptest;

TEST_CASE("the basis family is a valid complete family") {
  const ProjectorFamily fam = basis_family(2);
  CHECK(fam.size() == 2);
  CHECK(fam.completeness_defect() <= 1e-12);
  CHECK(fam.is_complete());
}

TEST_CASE("a lone rank-1 projector is valid with defect one") {
  const ProjectorFamily fam({dyad(ket2(1, 0))});
  CHECK(fam.completeness_defect() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(fam.is_complete());
}

TEST_CASE("non-orthogonal projectors are rejected with the index pair") {
  const double s = 1.0 / std::sqrt(2.0);
  const Matrix plus = dyad(ket2(s, s));
  const Matrix zero = dyad(ket2(1, 0));
  try {
    ProjectorFamily fam({plus, zero});
    FAIL("expected NotOrthogonal");
  } catch (const NotOrthogonal& e) {
    CHECK(e.first == 0);
    CHECK(e.second == 1);
    // |B_0 B_1| = 1/sqrt(2) for these two.
    CHECK(operator_norm(plus * zero) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("non-projectors and dim mismatches are rejected") {
  CHECK_THROWS_AS(ProjectorFamily({sigma_x()}), NotProjector);  // not idempotent
  Matrix skew(2, 2);
  skew << 0, 1, 0, 0;
  CHECK_THROWS_AS(ProjectorFamily({skew}), NotProjector);  // not self-adjoint
  CHECK_THROWS_AS(ProjectorFamily({Matrix::Zero(2, 2)}), NotProjector);
  CHECK_THROWS_AS(ProjectorFamily({dyad(ket2(1, 0)), Matrix::Identity(3, 3)}),
                  DimMismatch);
  CHECK_THROWS_AS(ProjectorFamily(std::vector<Matrix>{}), InvalidConfig);
}

TEST_CASE("synthesis of simple combinations") {
  const ProjectorFamily fam = basis_family(2);
  CHECK(synthesize(fam, (RealVector(2) << 1, 1).finished()) ==
        Matrix::Identity(2, 2));
  CHECK(synthesize(fam, (RealVector(2) << 1, 0).finished()) == fam[0]);
  const Matrix c = synthesize(fam, (RealVector(2) << 2, -3).finished());
  CHECK(c(0, 0) == Complex(2, 0));
  CHECK(c(1, 1) == Complex(-3, 0));
  CHECK(c(0, 1) == Complex(0, 0));
}

TEST_CASE("decompose round-trips synthesize") {
  RandomSource rnd(301);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + (trial % 7);
    const Eigen::Index blocks =
        1 + static_cast<Eigen::Index>(rnd.integer(static_cast<std::uint64_t>(d)));
    const ProjectorFamily fam = rnd.block_family(d, blocks);
    const Vector coeffs = rnd.complex_vector(fam.size());
    const Vector recovered = decompose(fam, synthesize(fam, coeffs));
    CHECK((recovered - coeffs).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("operators with coherences across blocks are not in the algebra") {
  const ProjectorFamily fam = basis_family(2);
  try {
    decompose(fam, sigma_x());
    FAIL("expected NotInAlgebra");
  } catch (const NotInAlgebra& e) {
    CHECK(e.residual == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("identity decomposes to all-ones coefficients") {
  const ProjectorFamily fam = basis_family(3);
  const Vector ones = decompose(fam, Matrix::Identity(3, 3));
  for (Eigen::Index j = 0; j < 3; ++j)
    CHECK(std::abs(ones(j) - Complex(1, 0)) <= 1e-12);
}

TEST_CASE("synthesized elements commute") {
  RandomSource rnd(302);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index d = 2 + (trial % 7);
    const Eigen::Index blocks =
        1 + static_cast<Eigen::Index>(rnd.integer(static_cast<std::uint64_t>(d)));
    const ProjectorFamily fam = rnd.block_family(d, blocks);
    const Matrix c1 = synthesize(fam, rnd.complex_vector(fam.size()));
    const Matrix c2 = synthesize(fam, rnd.complex_vector(fam.size()));
    CHECK(operator_norm(commutator(c1, c2)) <= 1e-12);
  }
}

TEST_CASE("partial sums of a family are projectors") {
  RandomSource rnd(303);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 3 + (trial % 6);
    const ProjectorFamily fam = rnd.block_family(d, 3);
    Matrix sum = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < fam.size(); ++j)
      if (rnd.uniform() < 0.7) sum += fam[j];
    if (operator_norm(sum) == 0.0) continue;
    CHECK(is_projector(sum, 1e-10));
  }
}

TEST_CASE("pinching erases cross-block coherences") {
  const ProjectorFamily fam = basis_family(2);
  CHECK(operator_norm(pinch(fam, sigma_x())) <= 1e-15);
  CHECK(operator_norm(pinch(fam, sigma_z()) - sigma_z()) <= 1e-15);
}
