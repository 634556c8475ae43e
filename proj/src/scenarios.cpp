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

#include "qpredict/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qpredict {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_amplitudes(Complex a, Complex b) {
  const double total = std::norm(a) + std::norm(b);
  if (!(std::abs(total - 1.0) <= kProbabilityTol)) throw NotNormalized(total);
}

Complex amplitude(const TwoSourceConfig& cfg, const Eigen::Vector3d& source) {
  return cfg.mode == SourceMode::particle
             ? free_propagator(cfg.x_detect, source, cfg.t)
             : helmholtz_green(cfg.x_detect, source, cfg.energy);
}

Matrix diag4(double d0, double d1, double d2, double d3) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

}  // namespace

Complex free_propagator(const Eigen::Vector3d& x,
                        const Eigen::Vector3d& x_prime, double t) {
  if (!(t > 0.0)) throw NonPositiveTime(t);
  const double r2 = (x - x_prime).squaredNorm();
  return std::pow(Complex(0.0, kTwoPi * t), -1.5) *
         std::exp(Complex(0.0, r2 / (2.0 * t)));
}

Complex helmholtz_green(const Eigen::Vector3d& x,
                        const Eigen::Vector3d& x_prime, double energy) {
  if (!(energy > 0.0)) throw NonPositiveEnergy(energy);
  const double r = (x - x_prime).norm();
  if (!(r > 0.0)) throw CoincidentPoints();
  const double omega = std::sqrt(2.0 * energy);
  return std::exp(Complex(0.0, omega * r)) / r;
}

void TwoSourceConfig::validate() const {
  require_amplitudes(a, b);
  if (!x_detect.allFinite() || !x_plus.allFinite() || !x_minus.allFinite())
    throw InvalidConfig("positions must be finite");
  if (mode == SourceMode::particle) {
    if (!(t > 0.0)) throw NonPositiveTime(t);
  } else {
    if (!(energy > 0.0)) throw NonPositiveEnergy(energy);
    if (!((x_detect - x_plus).norm() > 0.0) ||
        !((x_detect - x_minus).norm() > 0.0))
      throw CoincidentPoints();
  }
}

TwoSourceScenario build_two_source(const TwoSourceConfig& cfg) {
  cfg.validate();
  Vector psi(2);
  psi << cfg.a, cfg.b;
  Vector v(2);
  v << amplitude(cfg, cfg.x_plus), amplitude(cfg, cfg.x_minus);
  // A_uv = conj(v_u) v_v: the detection observable restricted to the
  // two-dimensional source span, normalized so tr(WA) = |a v_+ + b v_-|^2.
  Matrix a_eff = v.conjugate() * v.transpose();
  return {DensityOperator::pure(psi), basis_family(2), std::move(a_eff),
          std::move(v)};
}

double unconditional_intensity(const TwoSourceConfig& cfg) {
  const TwoSourceScenario scn = build_two_source(cfg);
  return std::norm(cfg.a * scn.amplitudes(0) + cfg.b * scn.amplitudes(1));
}

ConditionalExpectation conditioned_predictor(const TwoSourceConfig& cfg) {
  const TwoSourceScenario scn = build_two_source(cfg);
  if (std::norm(cfg.a) <= kValidationTol)
    throw ZeroProbabilityBranch(std::norm(cfg.a));
  if (std::norm(cfg.b) <= kValidationTol)
    throw ZeroProbabilityBranch(std::norm(cfg.b));
  return conditional_expectation(scn.state, scn.effective_observable,
                                 scn.family);
}

double averaged_predictor_expectation(const TwoSourceConfig& cfg) {
  const TwoSourceScenario scn = build_two_source(cfg);
  return std::norm(cfg.a) * std::norm(scn.amplitudes(0)) +
         std::norm(cfg.b) * std::norm(scn.amplitudes(1));
}

double interference_term(const TwoSourceConfig& cfg) {
  const TwoSourceScenario scn = build_two_source(cfg);
  return 2.0 * (std::conj(cfg.a) * cfg.b * std::conj(scn.amplitudes(0)) *
                scn.amplitudes(1))
                   .real();
}

double charge_residual(const CompositeScenario& scn) {
  return (scn.charge * scn.psi0 - scn.charge_eigenvalue * scn.psi0).norm();
}

CompositeScenario build_cat(Complex a, Complex b) {
  require_amplitudes(a, b);
  Vector psi0 = Vector::Zero(4);
  psi0(2) = a;  // excited atom, no photon
  psi0(1) = b;  // ground-state atom, one photon
  ProjectorFamily photon({diag4(1, 0, 1, 0), diag4(0, 1, 0, 1)});
  ProjectorFamily atom({diag4(1, 1, 0, 0), diag4(0, 0, 1, 1)});
  const Matrix charge = diag4(0, 1, 1, 2);  // C1 x I + I x C2, C_i = diag(0,1)
  return {CompositeKind::cat,
          a,
          b,
          psi0,
          DensityOperator::pure(psi0),
          std::move(photon),
          std::move(atom),
          {"photon=0", "photon=1"},
          {"atom=ground", "atom=excited"},
          charge,
          1.0};
}

double cat_conditional_ground(Complex a, Complex b) {
  const CompositeScenario scn = build_cat(a, b);
  const DensityOperator reduced = reduce_state(scn.state, scn.family[1]);
  return expectation(reduced, scn.partner_family[0]).real();
}

CompositeScenario build_epr(Complex a, Complex b) {
  require_amplitudes(a, b);
  Vector psi0 = Vector::Zero(4);
  psi0(1) = a;  // first +1, second -1
  psi0(2) = b;  // first -1, second +1
  ProjectorFamily second({diag4(1, 0, 1, 0), diag4(0, 1, 0, 1)});
  ProjectorFamily first({diag4(1, 1, 0, 0), diag4(0, 0, 1, 1)});
  const Matrix charge = diag4(2, 0, 0, -2);  // L1 x I + I x L2, L_i = diag(1,-1)
  return {CompositeKind::epr,
          a,
          b,
          psi0,
          DensityOperator::pure(psi0),
          std::move(second),
          std::move(first),
          {"second=+1", "second=-1"},
          {"first=+1", "first=-1"},
          charge,
          0.0};
}

double epr_conditional_first_up(Complex a, Complex b) {
  const CompositeScenario scn = build_epr(a, b);
  const DensityOperator reduced = reduce_state(scn.state, scn.family[1]);
  return expectation(reduced, scn.partner_family[0]).real();
}

void ScenarioConfig::validate() const {
  require_amplitudes(a, b);
  const auto is_one_of = [this](std::initializer_list<const char*> allowed) {
    for (const char* token : allowed)
      if (observe == token) return true;
    return false;
  };
  switch (kind) {
    case ScenarioKind::two_source:
      two_source().validate();
      if (!is_one_of({"none", "plus", "minus"}))
        throw InvalidConfig("observe must be none|plus|minus, got " + observe);
      break;
    case ScenarioKind::cat:
      if (!is_one_of({"none", "photon", "no-photon"}))
        throw InvalidConfig("observe must be none|photon|no-photon, got " +
                            observe);
      break;
    case ScenarioKind::epr:
      if (!is_one_of({"none", "plus", "minus"}))
        throw InvalidConfig("observe must be none|plus|minus, got " + observe);
      break;
  }
}

TwoSourceConfig ScenarioConfig::two_source() const {
  TwoSourceConfig cfg;
  cfg.a = a;
  cfg.b = b;
  cfg.x_plus = x_plus;
  cfg.x_minus = x_minus;
  cfg.x_detect = x_detect;
  cfg.mode = mode;
  cfg.t = t;
  cfg.energy = energy;
  return cfg;
}

}  // namespace qpredict
