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

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "optowork/system1.hpp"

namespace optowork {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst residual observed
  double tolerance = 0.0;  // pass iff worst < tolerance (or <= for exact checks)
  std::string detail;
};

struct SelfCheckOptions {
  // Noise model fed to the Lyapunov route. Replaced in tests to confirm the
  // cross-route checks catch a corrupted model.
  std::function<Eigen::MatrixXd(const system1::Params&)> noise = system1::noise_matrix;
  unsigned long long seed = 20240521ULL;
};

// Runs the cross-module invariant suite. Never throws for a failing check;
// the failure is recorded in the result.
std::vector<CheckResult> self_check(const SelfCheckOptions& options = {});

}  // namespace optowork
