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

#include "optowork/thermo.hpp"

#include <cmath>
#include <string>

#include "optowork/errors.hpp"

namespace optowork::thermo {

namespace {

void require_physical(const TwoModeStandardForm& f, const char* where) {
  if (!std::isfinite(f.x) || !std::isfinite(f.y) || !std::isfinite(f.z) || !(f.x > 0.0) ||
      !(f.y > 0.0) || !(f.x * f.y - f.z * f.z > 0.0)) {
    throw DomainError(std::string(where) + ": unphysical standard form");
  }
}

// ln(num / den) for a ratio that must be positive.
double log_ratio(double num, double den, const char* where) {
  if (!(den > 0.0) || !(num > 0.0)) {
    throw DomainError(std::string(where) + ": nonpositive logarithm argument");
  }
  return std::log(num / den);
}

Eigen::Matrix2d rotation(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

}  // namespace

std::string_view to_string(MeasurementKind kind) {
  return kind == MeasurementKind::kHomodyne ? "homodyne" : "heterodyne";
}

std::string_view to_string(Witness w) {
  switch (w) {
    case Witness::kEntangled:
      return "entangled";
    case Witness::kNotWitnessed:
      return "not-witnessed";
    case Witness::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

Eigen::Matrix2d conditional_cm(const TwoModeStandardForm& f, const MeasurementSpec& m) {
  if (!(f.y > 0.0)) {
    throw DomainError("conditional_cm: partner variance must be positive");
  }
  const Eigen::Matrix2d xa = f.x * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d zab = Eigen::Vector2d(f.z, -f.z).asDiagonal();
  const Eigen::Matrix2d rot = rotation(m.angle);

  Eigen::Matrix2d inverse;
  if (m.kind == MeasurementKind::kHomodyne) {
    // (y I + R diag(v, 1/v) R^T / 2)^{-1} -> R diag(1/y, 0) R^T as v -> 0.
    inverse = rot * Eigen::Vector2d(1.0 / f.y, 0.0).asDiagonal() * rot.transpose();
  } else {
    inverse = (f.y * Eigen::Matrix2d::Identity() + 0.5 * Eigen::Matrix2d::Identity()).inverse();
  }
  return xa - zab * inverse * zab.transpose();
}

double work_single(const TwoModeStandardForm& f, MeasurementKind kind) {
  require_physical(f, "work_single");
  const double x = f.x;
  const double y = f.y;
  const double z2 = f.z * f.z;
  if (kind == MeasurementKind::kHomodyne) {
    return 0.5 * log_ratio(x * y, x * y - z2, "work_single(homodyne)");
  }
  return log_ratio(2.0 * x * y + x, 2.0 * x * y + x - 2.0 * z2, "work_single(heterodyne)");
}

double work_separable_bound(double x, double y, MeasurementKind kind) {
  if (kind == MeasurementKind::kHomodyne) {
    return 0.5 * log_ratio(4.0 * x * y, 2.0 * x + 2.0 * y - 1.0, "work_separable_bound(homodyne)");
  }
  return log_ratio(2.0 * x * (2.0 * y + 1.0), 4.0 * x + 2.0 * y - 1.0,
                   "work_separable_bound(heterodyne)");
}

double work_max(double x, double y, MeasurementKind kind) {
  if (kind == MeasurementKind::kHomodyne) {
    const double gap = 1.0 - 2.0 * std::abs(x - y);
    if (!(gap > 0.0)) {
      throw MaxWorkUndefined("homodyne maximum work undefined for |x - y| >= 1/2");
    }
    return 0.5 * log_ratio(4.0 * x * y, gap, "work_max(homodyne)");
  }
  // Piecewise as printed; the branches do not meet at x == y.
  if (x <= y) {
    return 0.5 * log_ratio(2.0 * x, 1.0, "work_max(heterodyne)");
  }
  const double den = 4.0 * x - 2.0 * y + 1.0;
  if (!(den > 0.0)) {
    throw MaxWorkUndefined("heterodyne maximum work undefined for 4x - 2y + 1 <= 0");
  }
  return log_ratio(2.0 * x * (2.0 * y + 1.0), den, "work_max(heterodyne)");
}

double work_double(const TwoModeStandardForm& f, const DoubleMeasurementSpec& d) {
  require_physical(f, "work_double");
  const double x = f.x;
  const double y = f.y;
  const double z2 = f.z * f.z;
  if (d.kind == MeasurementKind::kHomodyne) {
    const double bracket = 1.0 + 2.0 * std::cos(2.0 * d.theta + 2.0 * d.phi);
    return 0.5 * log_ratio(4.0 * x * y, 4.0 * x * y - 2.0 * z2 * bracket, "work_double(0,0)");
  }
  const double num = (1.0 + 2.0 * x) * (1.0 + 2.0 * y);
  return log_ratio(num, 1.0 + 2.0 * y + x * (2.0 + 4.0 * y) - 4.0 * z2, "work_double(1,1)");
}

WorkReport work_report(const TwoModeStandardForm& f, MeasurementKind kind) {
  WorkReport report;
  report.w = work_single(f, kind);
  report.w_sep = work_separable_bound(f.x, f.y, kind);
  try {
    report.w_max = work_max(f.x, f.y, kind);
  } catch (const MaxWorkUndefined&) {
    report.w_max.reset();
  }
  const double margin = report.w - report.w_sep;
  if (std::abs(margin) < kWitnessTieBand) {
    report.witness = Witness::kInconclusive;
  } else {
    report.witness = margin > 0.0 ? Witness::kEntangled : Witness::kNotWitnessed;
  }
  return report;
}

}  // namespace optowork::thermo
