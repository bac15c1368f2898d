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

// A vibrating mirror driven by a strong laser, coupled to its Stokes (optic 1)
// and anti-Stokes (optic 2) sidebands. Lossless evolution of the joint vacuum
// in closed form.
//
// Mode order is (optic 1, optic 2, mirror); each mode carries (X, Y).
namespace optowork::system2 {

inline constexpr int kOptic1 = 0;
inline constexpr int kOptic2 = 1;
inline constexpr int kMirror = 2;

struct Params {
  double coupling_ratio = 1.5;  // x = g2 / g1, must exceed 1
  double phase = 0.0;           // Omega t, with Omega^2 = g2^2 - g1^2

  void validate() const;
};

struct EvolutionCoefficients {
  double k1, k2, k3;
  double l1, l2, l3;
};

EvolutionCoefficients evolution_coefficients(const Params& p);

// Symplectic 6x6 map acting on (X1, Y1, X2, Y2, Xd, Yd) at time t.
Eigen::MatrixXd evolution_map(const Params& p);

// Covariance elements in the unit-vacuum convention: optical variances v11,
// v22, mirror variance v33, and the X-X correlations v21 (optic 1-optic 2),
// v31 (optic 1-mirror), v32 (optic 2-mirror).
struct ClosedFormElements {
  double v11, v22, v33;
  double v21, v31, v32;
};

ClosedFormElements closed_form_elements(const Params& p);

// 6x6 CM assembled from closed_form_elements, scaled to vacuum 1/2.
CovarianceMatrix tripartite_cm(const Params& p);

// Same state from evolution_map applied to the vacuum, S (I/2) S^T.
CovarianceMatrix tripartite_cm_composed(const Params& p);

TwoModeStandardForm optic_optic_cm(const Params& p);

}  // namespace optowork::system2
