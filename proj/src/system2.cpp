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

#include "optowork/system2.hpp"

#include <array>
#include <cmath>

#include "optowork/errors.hpp"

namespace optowork::system2 {

void Params::validate() const {
  if (!std::isfinite(coupling_ratio) || !(coupling_ratio > 1.0 + 1e-9)) {
    throw DomainError("system2: coupling ratio x = g2/g1 must exceed 1");
  }
  if (!std::isfinite(phase)) {
    throw DomainError("system2: phase must be finite");
  }
}

EvolutionCoefficients evolution_coefficients(const Params& p) {
  p.validate();
  const double x = p.coupling_ratio;
  const double c = std::cos(p.phase);
  const double s = std::sin(p.phase);
  const double q = x * x - 1.0;
  const double root_q = std::sqrt(q);
  return {
      .k1 = (x * x - c) / q,
      .k2 = (x * x * c - 1.0) / q,
      .k3 = c,
      .l1 = x * (c - 1.0) / q,
      .l2 = s / root_q,
      .l3 = x * s / root_q,
  };
}

Eigen::MatrixXd evolution_map(const Params& p) {
  const auto [k1, k2, k3, l1, l2, l3] = evolution_coefficients(p);
  // c1(t) = k1 c1 + l1 c2^+ + l2 d^+
  // c2(t) = -l1 c1^+ + k2 c2 + l3 d
  // d(t)  = l2 c1^+ - l3 c2 + k3 d
  Eigen::MatrixXd s(6, 6);
  // clang-format off
  s <<  k1,  0.0,  l1,  0.0,  l2,  0.0,
       0.0,  k1,  0.0, -l1,  0.0, -l2,
      -l1,  0.0,  k2,  0.0,  l3,  0.0,
       0.0,  l1,  0.0,  k2,  0.0,  l3,
       l2,  0.0, -l3,  0.0,  k3,  0.0,
       0.0, -l2,  0.0, -l3,  0.0,  k3;
  // clang-format on
  return s;
}

ClosedFormElements closed_form_elements(const Params& p) {
  p.validate();
  const double x = p.coupling_ratio;
  const double x2 = x * x;
  const double c = std::cos(p.phase);
  const double s = std::sin(p.phase);
  const double q = x2 - 1.0;
  const double q2 = q * q;
  const double root_q = std::sqrt(q);
  // x^4 + (1 + c^2 - 4c) x^2 + c^2 regrouped as (x^2 - c)^2 + (1 - c)^2 x^2 so
  // that zero phase lands exactly on the vacuum.
  const double a = x2 - c;
  const double b = x2 * c - 1.0;
  const double drift = (1.0 - c) * (1.0 - c) * x2;

  ClosedFormElements e{};
  e.v11 = (a * a + drift + q * s * s) / q2;
  e.v22 = (b * b + drift + x2 * q * s * s) / q2;
  e.v33 = (1.0 + x2) * s * s / q + c * c;
  e.v21 = x * (1.0 + x2) * (1.0 - c) * (1.0 - c) / q2 + x * s * s / q;
  e.v31 = ((2.0 * x2 * s - (1.0 + x2) * s * c) / q + s * c) / root_q;
  e.v32 = ((2.0 * x * s - (1.0 + x2) * x * s * c) / q + x * s * c) / root_q;
  return e;
}

CovarianceMatrix tripartite_cm(const Params& p) {
  const ClosedFormElements e = closed_form_elements(p);
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(6, 6);
  const std::array<double, 3> var{e.v11, e.v22, e.v33};
  for (int k = 0; k < 3; ++k) {
    v(2 * k, 2 * k) = v(2 * k + 1, 2 * k + 1) = var[k];
  }
  auto couple = [&v](int a, int b, double xx, double yy) {
    v(2 * a, 2 * b) = v(2 * b, 2 * a) = xx;
    v(2 * a + 1, 2 * b + 1) = v(2 * b + 1, 2 * a + 1) = yy;
  };
  couple(kOptic1, kOptic2, e.v21, -e.v21);
  couple(kOptic1, kMirror, e.v31, -e.v31);
  couple(kOptic2, kMirror, e.v32, e.v32);
  return CovarianceMatrix(0.5 * v);
}

CovarianceMatrix tripartite_cm_composed(const Params& p) {
  const Eigen::MatrixXd s = evolution_map(p);
  return CovarianceMatrix(0.5 * s * s.transpose());
}

TwoModeStandardForm optic_optic_cm(const Params& p) {
  constexpr std::array<int, 2> optics{kOptic1, kOptic2};
  return standard_form(reduce(tripartite_cm(p), optics));
}

}  // namespace optowork::system2
