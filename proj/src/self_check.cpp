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

#include "optowork/self_check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>

#include "optowork/gaussian.hpp"
#include "optowork/presets.hpp"
#include "optowork/system2.hpp"
#include "optowork/thermo.hpp"

namespace optowork {

namespace {

using thermo::MeasurementKind;

constexpr std::array<MeasurementKind, 2> kKinds{MeasurementKind::kHomodyne,
                                                MeasurementKind::kHeterodyne};
constexpr std::array<int, 2> kMirrors{system1::kMirror1, system1::kMirror2};
constexpr std::array<int, 2> kOptics{system1::kOptic1, system1::kOptic2};

std::vector<system1::Params> system1_grid() {
  std::vector<system1::Params> grid;
  for (double c : {1.0, 5.0, 34.0, 68.0}) {
    for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      for (double n : {0.0, 1.0, 2.0, 5.0}) {
        for (double g : {0.05, 0.2}) {
          grid.push_back({1.0, g, c, r, n});
        }
      }
    }
  }
  return grid;
}

std::vector<system2::Params> system2_grid() {
  std::vector<system2::Params> grid;
  for (double x : {1.1, 1.5, 2.5, 5.0}) {
    for (int k = 0; k < 64; ++k) {
      grid.push_back({x, 2.0 * std::numbers::pi * k / 64.0});
    }
  }
  return grid;
}

// Physical standard forms with x, y in [1/2, 5].
std::vector<TwoModeStandardForm> random_forms(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> var(0.5, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TwoModeStandardForm> forms;
  while (static_cast<int>(forms.size()) < count) {
    const double x = var(rng);
    const double y = var(rng);
    const double z2_max = x * y - 0.25 - 0.5 * std::abs(x - y);
    if (z2_max <= 0.0) {
      continue;
    }
    const double z = std::sqrt(0.999 * unit(rng) * z2_max) * (unit(rng) < 0.5 ? -1.0 : 1.0);
    forms.push_back({x, y, z});
  }
  return forms;
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd random_symplectic(std::mt19937_64& rng, int n_modes) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-0.8, 0.8);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  for (int layer = 0; layer < 3; ++layer) {
    Eigen::MatrixXd local = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
      const double t = angle(rng);
      const double q = squeeze(rng);
      Eigen::Matrix2d rot;
      rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
      local.block<2, 2>(2 * k, 2 * k) =
          Eigen::Vector2d(std::exp(q), std::exp(-q)).asDiagonal() * rot;
    }
    s = local * s;
    // Beam splitter between neighbouring modes keeps the layers entangling.
    for (int k = 0; k + 1 < n_modes; ++k) {
      const double t = angle(rng);
      Eigen::MatrixXd bs = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
      const double c = std::cos(t);
      const double sn = std::sin(t);
      for (int q = 0; q < 2; ++q) {
        const int a = 2 * k + q;
        const int b = 2 * (k + 1) + q;
        bs(a, a) = c;
        bs(a, b) = sn;
        bs(b, a) = -sn;
        bs(b, b) = c;
      }
      s = bs * s;
    }
  }
  return s;
}

class Suite {
 public:
  template <typename Fn>
  void run(std::string name, double tolerance, Fn&& fn) {
    CheckResult result{std::move(name), false, 0.0, tolerance, {}};
    try {
      result.worst = fn(result.detail);
      result.passed = result.worst < tolerance || (tolerance == 0.0 && result.worst == 0.0);
    } catch (const std::exception& e) {
      result.passed = false;
      result.worst = INFINITY;
      result.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Largest increase along a series that should be nonincreasing.
double worst_rise(const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    worst = std::max(worst, v[i] - v[i - 1]);
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> self_check(const SelfCheckOptions& options) {
  Suite suite;
  std::mt19937_64 rng(options.seed);
  const auto grid1 = system1_grid();
  const auto grid2 = system2_grid();

  suite.run("lyapunov_residual", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid1) {
      const Eigen::MatrixXd a = system1::drift_matrix(p);
      const Eigen::MatrixXd d = options.noise(p);
      const Eigen::MatrixXd v = solve_lyapunov(a, d);
      worst = std::max(worst, max_abs(a * v + v * a.transpose() + d) / max_abs(d));
    }
    detail = "relative max|AV+VA^T+D| over " + std::to_string(grid1.size()) + " points";
    return worst;
  });

  suite.run("lyapunov_vs_closed_form", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid1) {
      const CovarianceMatrix v = system1::steady_state_cm(p, options.noise(p));
      const auto cf = system1::closed_form_blocks(p);
      worst = std::max(worst, max_abs(reduce(v, kMirrors).matrix() -
                                      cf.mirror_mirror.to_matrix().matrix()));
      worst = std::max(
          worst, max_abs(reduce(v, kOptics).matrix() - cf.optic_optic.to_matrix().matrix()));
    }
    detail = "max abs error of mirror/optic blocks";
    return worst;
  });

  suite.run("system1_physicality", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid1) {
      const auto nu = symplectic_eigenvalues(system1::steady_state_cm(p, options.noise(p)));
      worst = std::max(worst, 0.5 - nu.front());
    }
    detail = "max(1/2 - smallest symplectic eigenvalue)";
    return std::max(worst, 0.0);
  });

  suite.run("system1_vacuum_fixed_point", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (double c : {0.0, 1.0, 5.0, 34.0, 68.0, 100.0}) {
      const system1::Params p{1.0, 0.05, c, 0.0, 0.0};
      const CovarianceMatrix v = system1::steady_state_cm(p, options.noise(p));
      worst = std::max(worst, max_abs(v.matrix() - CovarianceMatrix::vacuum(4).matrix()));
    }
    detail = "r = n_th = 0 gives I/2";
    return worst;
  });

  suite.run("system1_monotonicity", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (double c : {1.0, 34.0, 68.0}) {
      for (double n : {0.0, 1.0, 5.0}) {
        std::vector<double> neg_v13;
        for (int i = 0; i <= 100; ++i) {
          neg_v13.push_back(-system1::closed_form_blocks({1.0, 0.05, c, 0.02 * i, n}).mirror_mirror.z);
        }
        worst = std::max(worst, worst_rise(neg_v13));
      }
      for (double r : {0.5, 1.0, 2.0}) {
        std::vector<double> ln;
        for (int i = 0; i <= 100; ++i) {
          ln.push_back(logarithmic_negativity(
              system1::closed_form_blocks({1.0, 0.05, c, r, 0.05 * i}).mirror_mirror));
        }
        worst = std::max(worst, worst_rise(ln));
      }
    }
    detail = "v13 nondecreasing in r; mirror L_N nonincreasing in n_th";
    return worst;
  });

  suite.run("tmsv_calibration", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
      const double x = std::cosh(2.0 * r) / 2.0;
      const double z = std::sinh(2.0 * r) / 2.0;
      worst = std::max(worst, std::abs(logarithmic_negativity({x, x, z}) - 2.0 * r));
    }
    detail = "L_N(TMSV r) = 2r";
    return worst;
  });

  const auto forms = random_forms(rng, 1000);

  suite.run("pt_eigenvalue_symmetry", 0.0, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& f : forms) {
      const double base = min_pt_symplectic_eigenvalue(f);
      worst = std::max(worst, std::abs(base - min_pt_symplectic_eigenvalue({f.y, f.x, f.z})));
      worst = std::max(worst, std::abs(base - min_pt_symplectic_eigenvalue({f.x, f.y, -f.z})));
    }
    detail = "exact under x<->y and z->-z";
    return worst;
  });

  suite.run("negativity_threshold_continuity", 1e-8, [&](std::string& detail) {
    double worst = 0.0;
    for (double x : {0.6, 1.0, 2.5, 7.0}) {
      for (double eps : {-1e-9, 1e-9}) {
        const double z = x - (0.5 + eps);
        worst = std::max(worst, std::abs(logarithmic_negativity({x, x, z})));
      }
    }
    detail = "|L_N| at theta_minus = 1/2 +- 1e-9";
    return worst;
  });

  suite.run("symplectic_invariance", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid1.size(); i += 7) {
      const CovarianceMatrix v = system1::steady_state_cm(grid1[i], options.noise(grid1[i]));
      const Eigen::MatrixXd s = random_symplectic(rng, 4);
      const auto a = symplectic_eigenvalues(v);
      const auto b = symplectic_eigenvalues(CovarianceMatrix(s * v.matrix() * s.transpose()));
      for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]) / std::max(1.0, a[k]));
      }
    }
    detail = "spectrum of S V S^T vs V";
    return worst;
  });

  suite.run("reduce_embed_identity", 1e-15, [&](std::string& detail) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
      const CovarianceMatrix a = forms[i].to_matrix();
      const CovarianceMatrix b = forms[i + 20].to_matrix();
      const CovarianceMatrix ab = direct_sum(a, b);
      constexpr std::array<int, 2> first{0, 1};
      constexpr std::array<int, 2> second{2, 3};
      worst = std::max(worst, max_abs(reduce(ab, first).matrix() - a.matrix()));
      worst = std::max(worst, max_abs(reduce(ab, second).matrix() - b.matrix()));
    }
    detail = "reduce(direct_sum(a, b)) recovers a and b";
    return worst;
  });

  suite.run("system2_purity", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid2) {
      for (double nu : symplectic_eigenvalues(system2::tripartite_cm(p))) {
        worst = std::max(worst, std::abs(nu - 0.5));
      }
    }
    detail = "all symplectic eigenvalues 1/2";
    return worst;
  });

  suite.run("system2_determinant", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid2) {
      worst = std::max(worst, std::abs(system2::tripartite_cm(p).matrix().determinant() - 1.0 / 64));
    }
    detail = "det = 1/64";
    return worst;
  });

  suite.run("system2_route_equivalence", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid2) {
      worst = std::max(worst, max_abs(system2::tripartite_cm(p).matrix() -
                                      system2::tripartite_cm_composed(p).matrix()));
    }
    detail = "closed forms vs coefficient composition";
    return worst;
  });

  suite.run("system2_periodicity", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : grid2) {
      const system2::Params shifted{p.coupling_ratio, p.phase + 2.0 * std::numbers::pi};
      const auto a = system2::optic_optic_cm(p);
      const auto b = system2::optic_optic_cm(shifted);
      worst = std::max({worst, std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
    }
    detail = "optic block at phase and phase + 2 pi";
    return worst;
  });

  suite.run("system2_mirror_decoupling", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (double x : {1.1, 1.5, 2.5, 5.0}) {
      for (int k = 0; k <= 4; ++k) {
        const auto v = system2::tripartite_cm({x, k * std::numbers::pi});
        worst = std::max({worst, std::abs(v(0, 4)), std::abs(v(2, 4)), std::abs(v(1, 5)),
                          std::abs(v(3, 5))});
      }
    }
    detail = "optic-mirror correlations vanish at phase = k pi";
    return worst;
  });

  suite.run("system2_worked_point", 1e-10, [&](std::string& detail) {
    const system2::Params p{1.5, std::numbers::pi};
    const auto f = system2::optic_optic_cm(p);
    constexpr std::array<int, 2> optics{system2::kOptic1, system2::kOptic2};
    const auto g = standard_form(reduce(system2::tripartite_cm_composed(p), optics));
    double worst = std::max({std::abs(f.x - 6.26), std::abs(f.y - 6.26), std::abs(f.z - 6.24),
                             std::abs(g.x - 6.26), std::abs(g.y - 6.26), std::abs(g.z - 6.24)});
    worst = std::max(worst, std::abs(logarithmic_negativity(f) + std::log(0.04)));
    detail = "x=1.5, phase=pi gives (6.26, 6.26, 6.24), L_N = -ln 0.04";
    return worst;
  });

  suite.run("witness_consistency", 1.0, [&](std::string& detail) {
    std::vector<TwoModeStandardForm> states;
    for (const auto& p : grid1) {
      const auto cf = system1::closed_form_blocks(p);
      states.push_back(cf.mirror_mirror);
      states.push_back(cf.optic_optic);
    }
    for (const auto& p : grid2) {
      states.push_back(system2::optic_optic_cm(p));
    }
    int mismatches = 0;
    int compared = 0;
    for (const auto& f : states) {
      const bool entangled = logarithmic_negativity(f) > 0.0;
      for (auto kind : kKinds) {
        const auto report = thermo::work_report(f, kind);
        if (report.witness == thermo::Witness::kInconclusive) {
          continue;
        }
        ++compared;
        mismatches += report.entangled_witness() != entangled ? 1 : 0;
      }
    }
    detail = std::to_string(mismatches) + " mismatches over " + std::to_string(compared) +
             " decided comparisons";
    return static_cast<double>(mismatches);
  });

  suite.run("angle_identity", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    const thermo::DoubleMeasurementSpec spec{MeasurementKind::kHomodyne, std::numbers::pi / 6.0, 0.0};
    for (const auto& f : forms) {
      worst = std::max(worst, std::abs(thermo::work_double(f, spec) -
                                       thermo::work_single(f, MeasurementKind::kHomodyne)));
    }
    detail = "W00 = W0 at 2(theta + phi) = pi/3";
    return worst;
  });

  suite.run("backaction_consistency", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& f : forms) {
      for (auto kind : kKinds) {
        const Eigen::Matrix2d cond = thermo::conditional_cm(f, {kind, 0.0});
        const double route = 0.5 * std::log(f.x * f.x / cond.determinant());
        worst = std::max(worst, std::abs(route - thermo::work_single(f, kind)));
      }
    }
    detail = "work_single vs (1/2) ln(det X_a / det X_a|b)";
    return worst;
  });

  suite.run("separable_bound_identity", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& f : forms) {
      const double z = std::sqrt((f.x - 0.5) * (f.y - 0.5));
      for (auto kind : kKinds) {
        worst = std::max(worst, std::abs(thermo::work_single({f.x, f.y, z}, kind) -
                                         thermo::work_separable_bound(f.x, f.y, kind)));
      }
    }
    detail = "work at z^2 = (x-1/2)(y-1/2) equals the separable bound";
    return worst;
  });

  suite.run("work_monotone_in_correlations", 1.0, [&](std::string& detail) {
    int violations = 0;
    for (const auto& f : forms) {
      const double z2_max = f.x * f.y - 0.25 - 0.5 * std::abs(f.x - f.y);
      for (auto kind : kKinds) {
        double prev = -1.0;
        for (int i = 0; i <= 20; ++i) {
          const double w = thermo::work_single({f.x, f.y, std::sqrt(z2_max * i / 21.0)}, kind);
          violations += w > prev ? 0 : 1;
          prev = w;
        }
      }
    }
    detail = std::to_string(violations) + " non-increasing steps";
    return static_cast<double>(violations);
  });

  suite.run("bound_ordering", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& f : forms) {
      if (std::abs(f.x - f.y) < 0.5) {
        const double w = thermo::work_single(f, MeasurementKind::kHomodyne);
        worst = std::max(worst, w - thermo::work_max(f.x, f.y, MeasurementKind::kHomodyne));
      }
      if (f.x > f.y) {
        const double w = thermo::work_single(f, MeasurementKind::kHeterodyne);
        worst = std::max(worst, w - thermo::work_max(f.x, f.y, MeasurementKind::kHeterodyne));
      }
    }
    detail = "W <= W_max (homodyne; heterodyne x > y branch)";
    return std::max(worst, 0.0);
  });

  suite.run("preset_trends", 1e-12, [&](std::string& detail) {
    double worst = 0.0;
    // Negativity nonincreasing in n_th.
    for (const char* id : {"fig3", "fig5"}) {
      const auto d = sweep::run_figure_preset(id);
      for (double r : {0.5, 1.0, 1.5, 2.0}) {
        std::vector<double> ln;
        for (const auto& row : d.rows) {
          if (*row[0] == r) {
            ln.push_back(*row[2]);
          }
        }
        worst = std::max(worst, worst_rise(ln));
      }
    }
    // Every fig8 work column nondecreasing in C.
    const auto d8 = sweep::run_figure_preset("fig8");
    for (double n : {1.0, 2.0}) {
      for (std::size_t col = 2; col < d8.columns.size(); ++col) {
        std::vector<double> neg;
        for (const auto& row : d8.rows) {
          if (*row[0] == n) {
            neg.push_back(-*row[col]);
          }
        }
        worst = std::max(worst, worst_rise(neg));
      }
    }
    detail = "largest wrong-direction step in fig3/fig5 L_N and fig8 work columns";
    return worst;
  });

  return suite.take();
}

}  // namespace optowork
