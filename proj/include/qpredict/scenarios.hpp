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

/// Builders and closed-form evaluators for three scenarios: two-source
/// interference (particle and wave modes), excited-atom decay with photon
/// detection, and a spin pair with a conserved total spin.

#pragma once

#include <string>
#include <vector>

#include "qpredict/conditional.hpp"
#include "qpredict/operators.hpp"
#include "qpredict/types.hpp"

namespace qpredict {

/// Amplitude at x' of a free unit-mass particle (hbar = 1, 3 dimensions)
/// released at x a time t earlier: (2 pi i t)^(-3/2) exp(i|x-x'|^2 / 2t),
/// principal branch of the 3/2-power. The modulus (2 pi t)^(-3/2) is
/// independent of the positions.
Complex free_propagator(const Eigen::Vector3d& x, const Eigen::Vector3d& x_prime,
                        double t);

/// Stationary-wave amplitude exp(i w r)/r at distance r = |x - x'| for
/// energy E, with w = sqrt(2E).
Complex helmholtz_green(const Eigen::Vector3d& x, const Eigen::Vector3d& x_prime,
                        double energy);

enum class SourceMode { particle, wave };

/// Two indistinguishable sources at x_plus / x_minus emitting with
/// amplitudes a, b; detection at x_detect. `t` applies in particle mode,
/// `energy` in wave mode.
struct TwoSourceConfig {
  Complex a;
  Complex b;
  Eigen::Vector3d x_plus{0.0, 0.0, 1.0};
  Eigen::Vector3d x_minus{0.0, 0.0, -1.0};
  Eigen::Vector3d x_detect{0.0, 0.0, 0.0};
  SourceMode mode = SourceMode::particle;
  double t = 1.0;
  double energy = 1.0;

  void validate() const;
};

/// Effective two-level reduction: the superposed source state, the
/// which-source projectors, and the detection observable restricted to
/// the span of the two (orthogonal) source kets. The restriction is the
/// Gram dyad A_uv = conj(v_u) v_v of the propagation amplitudes
/// v = (amp(x_detect, x_plus), amp(x_detect, x_minus)), so that
/// tr(W A) = |a v_+ + b v_-|^2.
struct TwoSourceScenario {
  DensityOperator state;       // dyad of (a, b)
  ProjectorFamily family;      // {B_+, B_-}
  Matrix effective_observable; // Gram dyad, rank 1, positive
  Vector amplitudes;           // (v_+, v_-)
};

TwoSourceScenario build_two_source(const TwoSourceConfig& cfg);

/// |a v_+ + b v_-|^2: detection intensity when the source is not observed.
double unconditional_intensity(const TwoSourceConfig& cfg);

/// Predictor of the detection observable given the which-source algebra;
/// coefficients (|v_+|^2, |v_-|^2), independent of a and b.
ConditionalExpectation conditioned_predictor(const TwoSourceConfig& cfg);

/// |a|^2 |v_+|^2 + |b|^2 |v_-|^2: mean of the predictor in the initial
/// state, the classical mixture of the branch intensities.
double averaged_predictor_expectation(const TwoSourceConfig& cfg);

/// 2 Re(conj(a) b conj(v_+) v_-): the cross term separating the coherent
/// intensity from the classical mixture.
double interference_term(const TwoSourceConfig& cfg);

enum class CompositeKind { cat, epr };

/// Two non-interacting two-level subsystems with a conserved additive
/// charge, prepared in a superposition of the two charge-compatible
/// product states. `family` generates the measurement algebra of the
/// observed subsystem; `partner_family` resolves the other one.
struct CompositeScenario {
  CompositeKind kind;
  Complex a;
  Complex b;
  Vector psi0;                  // dim 4
  DensityOperator state;        // dyad of psi0
  ProjectorFamily family;       // observed subsystem
  ProjectorFamily partner_family;
  std::vector<std::string> family_labels;
  std::vector<std::string> partner_labels;
  Matrix charge;                // C1 x I + I x C2
  double charge_eigenvalue;     // 1 (cat) or 0 (epr)
};

/// |(charge - lambda) psi0|.
double charge_residual(const CompositeScenario& scn);

/// Atom (subsystem 1, levels 0/1) and photon occupation (subsystem 2,
/// 0/1), state a|1,0> + b|0,1>; basis index = 2*atom + photon. The
/// observed algebra is generated by the photon-number projectors.
CompositeScenario build_cat(Complex a, Complex b);

/// Probability of finding the atom in the ground state after a photon is
/// observed; exactly 1.
double cat_conditional_ground(Complex a, Complex b);

/// Spin pair a|+1,-1> + b|-1,+1> with total spin zero; basis index =
/// 2*(first spin is -1) + (second spin is -1). The observed algebra is
/// generated by the second-particle spin projectors.
CompositeScenario build_epr(Complex a, Complex b);

/// Probability of first-particle spin +1 after the second particle is
/// observed to be -1; exactly 1.
double epr_conditional_first_up(Complex a, Complex b);

enum class ScenarioKind { two_source, cat, epr };

/// Flat scenario configuration as exchanged with the CLI; field relevance
/// depends on `kind`. `observe` selects the conditioning branch reported
/// by a run: "plus"/"minus" for two-source and the spin pair,
/// "photon"/"no-photon" for the decay scenario, "none" for no
/// conditioning.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::two_source;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  SourceMode mode = SourceMode::particle;
  double t = 1.0;
  double energy = 1.0;
  Eigen::Vector3d x_plus{0.0, 0.0, 1.0};
  Eigen::Vector3d x_minus{0.0, 0.0, -1.0};
  Eigen::Vector3d x_detect{0.0, 0.0, 0.0};
  std::string observe = "none";

  void validate() const;
  TwoSourceConfig two_source() const;
};

}  // namespace qpredict
