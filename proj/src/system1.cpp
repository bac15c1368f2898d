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

#include "optowork/system1.hpp"

#include <cmath>
#include <string>

#include "optowork/errors.hpp"

namespace optowork::system1 {

namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw DomainError(std::string("system1: ") + what);
  }
}

}  // namespace

Params Params::with_coupling(double kappa, double gamma, double coupling, double r, double n_th) {
  Params p{kappa, gamma, 0.0, r, n_th};
  require(std::isfinite(coupling), "coupling must be finite");
  require(kappa > 0.0 && gamma > 0.0, "kappa and gamma must be positive");
  p.cooperativity = 4.0 * coupling * coupling / (gamma * kappa);
  p.validate();
  return p;
}

double Params::coupling() const { return std::sqrt(cooperativity * gamma * kappa / 4.0); }

double Params::bath_n() const {
  const double s = std::sinh(r);
  return s * s;
}

double Params::bath_m() const { return std::sinh(r) * std::cosh(r); }

void Params::validate() const {
  require(std::isfinite(kappa) && std::isfinite(gamma) && std::isfinite(cooperativity) &&
              std::isfinite(r) && std::isfinite(n_th),
          "parameters must be finite");
  require(kappa > 0.0, "kappa must be positive");
  require(gamma > 0.0, "gamma must be positive");
  require(cooperativity >= 0.0, "cooperativity must be nonnegative");
  require(r >= 0.0, "squeezing r must be nonnegative");
  require(n_th >= 0.0, "n_th must be nonnegative");
}

void PhysicalCavitySpec::validate() const {
  require(std::isfinite(pump_power) && pump_power >= 0.0, "pump power must be nonnegative");
  for (double v : {mass, mechanical_frequency, cavity_frequency, laser_frequency,
                   cavity_length, kappa, gamma}) {
    require(std::isfinite(v) && v > 0.0, "physical cavity parameters must be positive");
  }
}

Eigen::MatrixXd drift_matrix(const Params& p) {
  p.validate();
  const double g = p.coupling();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    a(i, i) = -p.gamma / 2.0;
    a(i, i + 4) = g;
    a(i + 4, i) = -g;
    a(i + 4, i + 4) = -p.kappa / 2.0;
  }
  return a;
}

Eigen::MatrixXd noise_matrix(const Params& p) {
  p.validate();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(8, 8);
  const double mech = p.gamma * (p.n_th + 0.5);
  const double opt = p.kappa * (p.bath_n() + 0.5);
  const double cross = p.bath_m() * p.kappa;
  for (int i = 0; i < 4; ++i) {
    d(i, i) = mech;
    d(i + 4, i + 4) = opt;
  }
  // X_c1-X_c2 correlate, Y_c1-Y_c2 anticorrelate.
  d(4, 6) = d(6, 4) = cross;
  d(5, 7) = d(7, 5) = -cross;
  return d;
}

CovarianceMatrix steady_state_cm(const Params& p) { return steady_state_cm(p, noise_matrix(p)); }

CovarianceMatrix steady_state_cm(const Params& p, const Eigen::MatrixXd& noise) {
  const Stability s = stability_check(p);
  if (!s.stable) {
    throw DomainError("system1: drift matrix unstable (max real part " +
                      std::to_string(s.max_real_part) + ")");
  }
  return CovarianceMatrix(solve_lyapunov(drift_matrix(p), noise));
}

ClosedFormBlocks closed_form_blocks(const Params& p) {
  p.validate();
  const double k = p.kappa;
  const double g = p.gamma;
  const double c = p.cooperativity;
  const double thermal = 1.0 + 2.0 * p.n_th;
  const double ch = std::cosh(2.0 * p.r);
  const double sh = std::sinh(2.0 * p.r);
  const double den = 2.0 * (k + g) * (1.0 + c);

  const double v11 = (k * c * ch + thermal * (k + g * (1.0 + c))) / den;
  const double v13 = k * c * sh / den;
  const double v22 = ((g + k * (1.0 + c)) * ch + thermal * g * c) / den;
  const double v57 = (g + k * (1.0 + c)) * sh / den;
  return {{v11, v11, v13}, {v22, v22, v57}};
}

double cooperativity_from_physical(const PhysicalCavitySpec& s) {
  s.validate();
  const double half_kappa = s.kappa / 2.0;
  const double lorentz = half_kappa * half_kappa + s.mechanical_frequency * s.mechanical_frequency;
  return 8.0 * s.cavity_frequency * s.cavity_frequency * s.pump_power /
         (s.mass * s.gamma * s.mechanical_frequency * s.laser_frequency * s.cavity_length *
          s.cavity_length * lorentz);
}

Stability stability_check(const Params& p) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(drift_matrix(p), false);
  const double worst = es.eigenvalues().real().maxCoeff();
  return {worst < -1e-12, worst};
}

}  // namespace optowork::system1
