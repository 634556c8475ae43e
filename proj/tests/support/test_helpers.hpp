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

#include "qpredict/operators.hpp"
#include "qpredict/types.hpp"

namespace qptest {

using qpredict::Complex;
using qpredict::Matrix;
using qpredict::RealVector;
using qpredict::Vector;

inline Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Vector ket2(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}

inline Matrix hermitian2(double alpha, Complex gamma, double beta) {
  Matrix m(2, 2);
  m << alpha, gamma, std::conj(gamma), beta;
  return m;
}

}  // namespace qptest
