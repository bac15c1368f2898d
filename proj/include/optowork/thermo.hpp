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

#include <numbers>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "optowork/gaussian.hpp"

// Work a local agent extracts from a heat bath after a Gaussian measurement
// on the partner mode. All work values are in units of k_B T.
namespace optowork::thermo {

enum class MeasurementKind { kHomodyne, kHeterodyne };

std::string_view to_string(MeasurementKind kind);

struct MeasurementSpec {
  MeasurementKind kind = MeasurementKind::kHomodyne;
  double angle = 0.0;  // detector rotation
};

// Both parties measure with the same kind. The default angles satisfy
// 2 (theta + phi) = pi / 3.
struct DoubleMeasurementSpec {
  MeasurementKind kind = MeasurementKind::kHomodyne;
  double theta = std::numbers::pi / 6.0;
  double phi = 0.0;
};

// Alice's covariance after Bob measures:
//   X_a - Z_ab (Y_b + C_b)^{-1} Z_ab^T
// Homodyne takes the infinitely squeezed detector limit.
Eigen::Matrix2d conditional_cm(const TwoModeStandardForm& f, const MeasurementSpec& m);

double work_single(const TwoModeStandardForm& f, MeasurementKind kind);

// Bound over separable states with local variances x, y.
double work_separable_bound(double x, double y, MeasurementKind kind);

// Throws MaxWorkUndefined when the printed bound is outside its domain.
double work_max(double x, double y, MeasurementKind kind);

double work_double(const TwoModeStandardForm& f, const DoubleMeasurementSpec& d);

enum class Witness { kEntangled, kNotWitnessed, kInconclusive };

std::string_view to_string(Witness w);

struct WorkReport {
  double w = 0.0;
  double w_sep = 0.0;
  std::optional<double> w_max;
  Witness witness = Witness::kNotWitnessed;

  bool entangled_witness() const { return witness == Witness::kEntangled; }
};

// |w - w_sep| below this is reported as inconclusive.
inline constexpr double kWitnessTieBand = 1e-10;

WorkReport work_report(const TwoModeStandardForm& f, MeasurementKind kind);

}  // namespace optowork::thermo
