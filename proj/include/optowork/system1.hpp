// Copyright 2026 The optowork Authors
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

#include <Eigen/Dense>

#include "optowork/gaussian.hpp"

// Two Fabry-Perot cavities driven by a common two-mode squeezed vacuum, each
// with a movable mirror, in the red-sideband steady state.
//
// Mode order is (mirror 1, mirror 2, cavity 1, cavity 2); each mode carries
// (X, Y). Rates are in units of kappa unless absolute values are supplied.
namespace optowork::system1 {

inline constexpr int kMirror1 = 0;
inline constexpr int kMirror2 = 1;
inline constexpr int kOptic1 = 2;
inline constexpr int kOptic2 = 3;

struct Params {
  double kappa = 1.0;          // cavity damping
  double gamma = 0.05;         // mechanical damping
  double cooperativity = 0.0;  // C = 4 G^2 / (gamma kappa)
  double r = 0.0;              // squeezing parameter
  double n_th = 0.0;           // mean thermal phonon number

  static Params with_coupling(double kappa, double gamma, double coupling, double r, double n_th);

  // Effective optomechanical coupling G = sqrt(C gamma kappa / 4).
  double coupling() const;
  // Squeezed-bath occupation sinh^2 r and correlation sinh r cosh r.
  double bath_n() const;
  double bath_m() const;

  // Throws DomainError on kappa <= 0, gamma <= 0, r < 0, n_th < 0, C < 0 or
  // non-finite values.
  void validate() const;
};

struct PhysicalCavitySpec {
  double pump_power;            // W
  double mass;                  // kg
  double mechanical_frequency;  // rad/s
  double cavity_frequency;      // rad/s
  double laser_frequency;       // rad/s
  double cavity_length;         // m
  double kappa;                 // rad/s
  double gamma;                 // rad/s

  void validate() const;
};

Eigen::MatrixXd drift_matrix(const Params& p);
Eigen::MatrixXd noise_matrix(const Params& p);

// Lyapunov steady state of drift_matrix(p), noise_matrix(p). Throws
// DomainError if the drift is not stable.
CovarianceMatrix steady_state_cm(const Params& p);

// Same solve with a caller-supplied noise matrix; used by the self-check
// mutation probe.
CovarianceMatrix steady_state_cm(const Params& p, const Eigen::MatrixXd& noise);

struct ClosedFormBlocks {
  TwoModeStandardForm mirror_mirror;  // (v11, v11, v13)
  TwoModeStandardForm optic_optic;    // (v22, v22, v57)
};

ClosedFormBlocks closed_form_blocks(const Params& p);

double cooperativity_from_physical(const PhysicalCavitySpec& s);

struct Stability {
  bool stable = false;
  double max_real_part = 0.0;
};

Stability stability_check(const Params& p);

}  // namespace optowork::system1
