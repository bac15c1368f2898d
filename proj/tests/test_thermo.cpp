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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "optowork/errors.hpp"
#include "optowork/system1.hpp"
#include "optowork/thermo.hpp"

using namespace optowork;
using namespace optowork::thermo;

namespace {

constexpr auto kHom = MeasurementKind::kHomodyne;
constexpr auto kHet = MeasurementKind::kHeterodyne;

TwoModeStandardForm reference_mirrors() {
  return system1::closed_form_blocks({1.0, 0.05, 34.0, 1.0, 1.0}).mirror_mirror;
}

TwoModeStandardForm tmsv(double r) {
  return {std::cosh(2 * r) / 2, std::cosh(2 * r) / 2, std::sinh(2 * r) / 2};
}

// Random standard form that satisfies the uncertainty relation.
TwoModeStandardForm random_physical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double x = 0.5 + 4.5 * u(rng);
    const double y = 0.5 + 4.5 * u(rng);
    const double z2_max = x * y - 0.25 - 0.5 * std::abs(x - y);
    if (z2_max > 0.0) {
      return {x, y, std::sqrt(u(rng) * z2_max)};
    }
  }
}

}  // namespace

TEST_CASE("work values at the reference point") {
  const auto f = reference_mirrors();
  CHECK(work_single(f, kHom) == doctest::Approx(0.857802696113069146).epsilon(1e-12));
  CHECK(work_single(f, kHet) == doctest::Approx(1.037999737964258952).epsilon(1e-12));
  CHECK(work_separable_bound(f.x, f.y, kHom) == doctest::Approx(0.380771919680502078).epsilon(1e-12));
  CHECK(work_separable_bound(f.x, f.y, kHet) == doctest::Approx(0.544319416594368564).epsilon(1e-12));
  CHECK(work_max(f.x, f.y, kHom) == doctest::Approx(1.309726615262904159).epsilon(1e-12));
  CHECK(work_max(f.x, f.y, kHet) == doctest::Approx(0.654863307631452079).epsilon(1e-12));
  CHECK(work_double(f, {kHet}) == doctest::Approx(0.710448113713236068).epsilon(1e-12));
  CHECK(work_double(f, {kHom}) == doctest::Approx(work_single(f, kHom)).epsilon(1e-14));
}

TEST_CASE("conditional CM of a two-mode squeezed vacuum") {
  const auto f = tmsv(1.0);
  const Eigen::Matrix2d het = conditional_cm(f, {kHet, 0.0});
  CHECK(het(0, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(het(1, 1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(het(0, 1)) < 1e-15);

  const Eigen::Matrix2d hom = conditional_cm(f, {kHom, 0.0});
  CHECK(hom(0, 0) == doctest::Approx(1.0 / (2.0 * std::cosh(2.0))).epsilon(1e-12));
  CHECK(hom(1, 1) == doctest::Approx(std::cosh(2.0) / 2));

  CHECK(work_double(f, {kHet}) == doctest::Approx(0.867561660966054374).epsilon(1e-12));
}

TEST_CASE("homodyne angle rotates the squeezed quadrature") {
  const auto f = reference_mirrors();
  const Eigen::Matrix2d a = conditional_cm(f, {kHom, 0.0});
  const Eigen::Matrix2d b = conditional_cm(f, {kHom, std::numbers::pi / 2});
  CHECK(a(0, 0) == doctest::Approx(b(1, 1)).epsilon(1e-13));
  CHECK(a(1, 1) == doctest::Approx(b(0, 0)).epsilon(1e-13));
  CHECK(a.determinant() == doctest::Approx(b.determinant()).epsilon(1e-13));
}

TEST_CASE("work equals the entropy drop of the measured mode") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_physical(rng);
    const double det_a = f.x * f.x;
    for (auto kind : {kHom, kHet}) {
      const double back = 0.5 * std::log(det_a / conditional_cm(f, {kind, 0.3}).determinant());
      CHECK(std::abs(back - work_single(f, kind)) < 1e-10);
    }
  }
}

TEST_CASE("separable bound is attained on the separability boundary") {
  for (double x : {0.6, 1.0, 2.5}) {
    for (double y : {0.7, 1.0, 4.0}) {
      const TwoModeStandardForm f{x, y, std::sqrt((x - 0.5) * (y - 0.5))};
      for (auto kind : {kHom, kHet}) {
        CHECK(work_single(f, kind) == doctest::Approx(work_separable_bound(x, y, kind)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("witness agrees with logarithmic negativity") {
  std::mt19937_64 rng(5);
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_physical(rng);
    const bool entangled = logarithmic_negativity(f) > 1e-9;
    const bool separable = logarithmic_negativity(f) == 0.0;
    for (auto kind : {kHom, kHet}) {
      const auto report = work_report(f, kind);
      if (entangled && report.witness == Witness::kNotWitnessed) ++disagreements;
      if (separable && report.witness == Witness::kEntangled) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("work_report on the vacuum is inconclusive") {
  for (auto kind : {kHom, kHet}) {
    const auto report = work_report({0.5, 0.5, 0.0}, kind);
    CHECK(report.w == 0.0);
    CHECK(std::abs(report.w_sep) < 1e-15);
    CHECK(report.witness == Witness::kInconclusive);
    CHECK_FALSE(report.entangled_witness());
  }
  const auto thermal = work_report({2.0, 2.0, 0.0}, kHom);
  CHECK(thermal.witness == Witness::kNotWitnessed);
  CHECK(work_report(reference_mirrors(), kHet).entangled_witness());
}

TEST_CASE("maximum bound domains") {
  CHECK_THROWS_AS(work_max(2.0, 1.0, kHom), MaxWorkUndefined);
  CHECK_THROWS_AS(work_max(1.0, 1.5, kHom), MaxWorkUndefined);
  CHECK_NOTHROW(work_max(1.0, 1.4, kHom));
  CHECK_FALSE(work_report({2.0, 1.0, 0.5}, kHom).w_max.has_value());

  // Heterodyne branches do not meet at x == y.
  CHECK(work_max(1.0, 1.0, kHet) == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(work_max(1.0 + 1e-12, 1.0, kHet) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("heterodyne maximum bounds the work when the measured mode is noisier") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto f = random_physical(rng);
    if (f.x <= f.y) continue;
    CHECK(work_single(f, kHet) <= work_max(f.x, f.y, kHet) + 1e-12);
  }
}

TEST_CASE("double homodyne angle dependence") {
  const auto f = reference_mirrors();
  const double w0 = work_single(f, kHom);
  CHECK(work_double(f, {kHom, std::numbers::pi / 12, std::numbers::pi / 12}) ==
        doctest::Approx(w0).epsilon(1e-13));
  // Bracket vanishes when 2 (theta + phi) = 2 pi / 3.
  CHECK(std::abs(work_double(f, {kHom, std::numbers::pi / 3, 0.0})) < 1e-14);
  const TwoModeStandardForm weak{1.5, 1.5, 0.3};
  CHECK(work_double(weak, {kHom, 0.0, 0.0}) > work_single(weak, kHom));
}

TEST_CASE("double heterodyne against conditional covariance route") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_physical(rng);
    // Both detectors add I/2: W = (1/2) ln det(X_a + I/2) / det(X_a|b + I/2).
    const Eigen::Matrix2d half = 0.5 * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d xa = f.x * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d cond = conditional_cm(f, {kHet, 0.0});
    const double oracle = 0.5 * std::log((xa + half).determinant() / (cond + half).determinant());
    CHECK(std::abs(work_double(f, {kHet}) - oracle) < 1e-10);
  }
}

TEST_CASE("work grows with correlations") {
  for (auto kind : {kHom, kHet}) {
    double prev = -1.0;
    for (double z = 0.0; z < 1.4; z += 0.1) {
      const double w = work_single({1.5, 1.5, z}, kind);
      CHECK(w > prev);
      prev = w;
    }
  }
}

TEST_CASE("unphysical input") {
  CHECK_THROWS_AS(work_single({1.0, 1.0, 1.0}, kHom), DomainError);
  CHECK_THROWS_AS(work_double({-1.0, 1.0, 0.0}, {kHet}), DomainError);
  CHECK_THROWS_AS(conditional_cm({1.0, 0.0, 0.0}, {kHom, 0.0}), DomainError);
  CHECK_THROWS_AS(work_separable_bound(0.1, 0.1, kHom), DomainError);
}

TEST_CASE("names") {
  CHECK(to_string(kHom) == "homodyne");
  CHECK(to_string(Witness::kInconclusive) == "inconclusive");
}
