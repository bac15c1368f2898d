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

#include <array>
#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "optowork/errors.hpp"
#include "optowork/gaussian.hpp"
#include "optowork/system1.hpp"
#include "optowork/system2.hpp"

using namespace optowork;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("solve_lyapunov scalar and decoupled channels") {
  Eigen::MatrixXd a(1, 1);
  a << -1.0;
  Eigen::MatrixXd d(1, 1);
  d << 2.0;
  CHECK(solve_lyapunov(a, d)(0, 0) == doctest::Approx(1.0).epsilon(1e-15));

  const Eigen::Vector3d rates(0.5, 2.0, 7.0);
  const Eigen::Vector3d noise(1.0, 3.0, 0.25);
  const Eigen::MatrixXd v =
      solve_lyapunov((-rates).asDiagonal().toDenseMatrix(), noise.asDiagonal().toDenseMatrix());
  for (int i = 0; i < 3; ++i) {
    CHECK(v(i, i) == doctest::Approx(noise(i) / (2.0 * rates(i))).epsilon(1e-14));
  }
  CHECK(max_abs(v - Eigen::MatrixXd(v.diagonal().asDiagonal())) < 1e-15);
}

TEST_CASE("solve_lyapunov agrees with the spectral oracle and has small residual") {
  const system1::Params p{1.0, 0.05, 34.0, 1.5, 1.0};
  const Eigen::MatrixXd a = system1::drift_matrix(p);
  const Eigen::MatrixXd d = system1::noise_matrix(p);
  const Eigen::MatrixXd v = solve_lyapunov(a, d);
  CHECK(max_abs(a * v + v * a.transpose() + d) < 1e-10 * max_abs(d));
  CHECK(max_abs(v - testing::spectral_lyapunov(a, d)) < 1e-10);
  CHECK(max_abs(v - v.transpose()) == 0.0);
}

TEST_CASE("solve_lyapunov rejects singular systems") {
  Eigen::MatrixXd a(2, 2);
  a << 0.0, 1.0, -1.0, 0.0;  // purely imaginary pair: l_i + l_j = 0
  CHECK_THROWS_AS(solve_lyapunov(a, Eigen::MatrixXd::Identity(2, 2)), SingularSystem);
  CHECK_THROWS_AS(solve_lyapunov(Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Identity(2, 2)),
                  SingularSystem);
  CHECK_THROWS_AS(solve_lyapunov(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(3, 3)),
                  DomainError);
}

TEST_CASE("CovarianceMatrix construction") {
  CHECK_THROWS_AS(CovarianceMatrix(Eigen::MatrixXd::Identity(3, 3)), DomainError);
  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(2, 2);
  asym(0, 1) = 1e-6;
  CHECK_THROWS_AS(CovarianceMatrix{asym}, DomainError);
  CHECK(CovarianceMatrix::vacuum(3).is_physical());
  CHECK_FALSE(CovarianceMatrix(0.4 * Eigen::MatrixXd::Identity(2, 2)).is_physical());
}

TEST_CASE("symplectic_eigenvalues") {
  SUBCASE("vacuum") {
    for (double nu : symplectic_eigenvalues(CovarianceMatrix::vacuum(4))) {
      CHECK(nu == doctest::Approx(0.5).epsilon(1e-15));
    }
  }
  SUBCASE("thermal") {
    const auto nu = symplectic_eigenvalues(CovarianceMatrix(3.5 * Eigen::MatrixXd::Identity(2, 2)));
    REQUIRE(nu.size() == 1);
    CHECK(nu[0] == doctest::Approx(3.5).epsilon(1e-15));
  }
  SUBCASE("system2 state stays pure") {
    const auto v = system2::tripartite_cm({1.5, 1.0});
    const auto nu = symplectic_eigenvalues(v);
    const auto oracle = testing::direct_symplectic_eigenvalues(v.matrix());
    REQUIRE(nu.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(nu[k] - 0.5) < 1e-9);
      CHECK(std::abs(nu[k] - oracle[k]) < 1e-9);
    }
  }
  SUBCASE("mixed system1 state against general eigensolver") {
    const auto v = system1::steady_state_cm({1.0, 0.2, 5.0, 1.0, 2.0});
    const auto nu = symplectic_eigenvalues(v);
    const auto oracle = testing::direct_symplectic_eigenvalues(v.matrix());
    for (std::size_t k = 0; k < nu.size(); ++k) {
      CHECK(std::abs(nu[k] - oracle[k]) < 1e-10);
    }
    CHECK(std::is_sorted(nu.begin(), nu.end()));
  }
  SUBCASE("not positive definite") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
    m(1, 1) = -1.0;
    CHECK_THROWS_AS(symplectic_eigenvalues(CovarianceMatrix(m)), NotPositiveDefinite);
  }
}

TEST_CASE("min_pt_symplectic_eigenvalue") {
  CHECK(min_pt_symplectic_eigenvalue({0.5, 0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));

  const double r = 1.0;
  const double tmsv = min_pt_symplectic_eigenvalue({std::cosh(2 * r) / 2, std::cosh(2 * r) / 2,
                                                    std::sinh(2 * r) / 2});
  CHECK(tmsv == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-13));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    // Symmetric x = y reduces to x - |z|.
    const double x = 0.5 + 4.0 * u(rng);
    const double z = (x - 0.01) * (2.0 * u(rng) - 1.0);
    CHECK(std::abs(min_pt_symplectic_eigenvalue({x, x, z}) - (x - std::abs(z))) < 1e-12);

    // General pattern against the symplectic spectrum of the transposed CM.
    const double y = 0.5 + 4.0 * u(rng);
    const double zmax = std::sqrt(std::max(0.0, x * y - 0.25 - 0.5 * std::abs(x - y)));
    const TwoModeStandardForm f{x, y, zmax * u(rng)};
    const Eigen::Matrix4d pt = testing::partial_transpose(f.to_matrix().matrix());
    const double oracle = testing::direct_symplectic_eigenvalues(pt).front();
    CHECK(std::abs(min_pt_symplectic_eigenvalue(f) - oracle) < 1e-10);
  }

  CHECK_THROWS_AS(min_pt_symplectic_eigenvalue({1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(min_pt_symplectic_eigenvalue({-1.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("pt eigenvalue symmetry is exact") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    const double z = 0.3 * std::sqrt(x * y);
    const double base = min_pt_symplectic_eigenvalue({x, y, z});
    CHECK(base == min_pt_symplectic_eigenvalue({y, x, z}));
    CHECK(base == min_pt_symplectic_eigenvalue({x, y, -z}));
  }
}

TEST_CASE("logarithmic_negativity") {
  CHECK(logarithmic_negativity({0.5, 0.5, 0.0}) == 0.0);
  CHECK(logarithmic_negativity({std::cosh(2.0) / 2, std::cosh(2.0) / 2, std::sinh(2.0) / 2}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  const auto cf = system1::closed_form_blocks({1.0, 0.05, 34.0, 1.0, 1.0});
  CHECK(logarithmic_negativity(cf.mirror_mirror) ==
        doctest::Approx(1.0506854996229806).epsilon(1e-12));

  // Continuity at the separability threshold.
  for (double x : {0.75, 2.0, 10.0}) {
    for (double eps : {-1e-9, 1e-9}) {
      CHECK(std::abs(logarithmic_negativity({x, x, x - 0.5 - eps})) < 1e-8);
    }
  }
  // Thermal-only states are never entangled.
  CHECK(logarithmic_negativity({3.0, 1.0, 0.0}) == 0.0);
}

TEST_CASE("renyi2_entropy") {
  CHECK(renyi2_entropy(CovarianceMatrix::vacuum(2)) == doctest::Approx(-std::log(4.0)));
  CHECK(renyi2_entropy(CovarianceMatrix(2.5 * Eigen::MatrixXd::Identity(4, 4))) ==
        doctest::Approx(2.0 * std::log(2.5)));

  const system1::Params p{1.0, 0.05, 34.0, 1.5, 1.0};
  constexpr std::array<int, 2> optics{system1::kOptic1, system1::kOptic2};
  const CovarianceMatrix block = reduce(system1::steady_state_cm(p), optics);
  const double v22 = block(0, 0);
  const double v57 = block(0, 2);
  CHECK(std::abs(renyi2_entropy(block) - 0.5 * std::log(std::pow(v22 * v22 - v57 * v57, 2))) <
        1e-12);

  Eigen::MatrixXd indefinite = Eigen::MatrixXd::Identity(2, 2);
  indefinite(0, 0) = -1.0;
  CHECK_THROWS_AS(renyi2_entropy(CovarianceMatrix(indefinite)), NotPositiveDefinite);
}

TEST_CASE("reduce") {
  constexpr std::array<int, 2> first_two{0, 1};
  CHECK(max_abs(reduce(CovarianceMatrix::vacuum(3), first_two).matrix() -
                CovarianceMatrix::vacuum(2).matrix()) == 0.0);

  const system1::Params p{1.0, 0.05, 34.0, 1.0, 1.0};
  const auto cf = system1::closed_form_blocks(p);
  constexpr std::array<int, 2> mirrors{system1::kMirror1, system1::kMirror2};
  CHECK(max_abs(reduce(system1::steady_state_cm(p), mirrors).matrix() -
                cf.mirror_mirror.to_matrix().matrix()) < 1e-10);

  const auto v2 = system2::tripartite_cm({1.5, 0.7});
  const auto f = standard_form(reduce(v2, first_two));
  const auto g = system2::optic_optic_cm({1.5, 0.7});
  CHECK(f.x == g.x);
  CHECK(f.y == g.y);
  CHECK(f.z == g.z);

  // Mode order is respected.
  constexpr std::array<int, 2> swapped{1, 0};
  const auto s = reduce(v2, swapped);
  CHECK(s(0, 0) == v2(2, 2));

  constexpr std::array<int, 1> bad{3};
  constexpr std::array<int, 2> dup{1, 1};
  CHECK_THROWS_AS(reduce(v2, bad), IndexOutOfRange);
  CHECK_THROWS_AS(reduce(v2, dup), IndexOutOfRange);
}

TEST_CASE("reduce inverts direct_sum") {
  const CovarianceMatrix a = TwoModeStandardForm{1.2, 0.9, 0.4}.to_matrix();
  const CovarianceMatrix b(2.0 * Eigen::MatrixXd::Identity(2, 2));
  const CovarianceMatrix ab = direct_sum(a, b);
  constexpr std::array<int, 2> head{0, 1};
  constexpr std::array<int, 1> tail{2};
  CHECK(max_abs(reduce(ab, head).matrix() - a.matrix()) == 0.0);
  CHECK(max_abs(reduce(ab, tail).matrix() - b.matrix()) == 0.0);
}

TEST_CASE("standard_form") {
  const auto vac = standard_form(CovarianceMatrix::vacuum(2));
  CHECK(vac.x == 0.5);
  CHECK(vac.y == 0.5);
  CHECK(vac.z == 0.0);

  Eigen::Matrix4d off = TwoModeStandardForm{1.0, 1.0, 0.5}.to_matrix().matrix();
  off(0, 3) = off(3, 0) = 1e-6;
  CHECK_THROWS_AS(standard_form(CovarianceMatrix(off)), PatternMismatch);
  CHECK_THROWS_AS(standard_form(CovarianceMatrix::vacuum(3)), PatternMismatch);
}
