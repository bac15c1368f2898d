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

#include <string>
#include <string_view>
#include <vector>

#include "optowork/sweep.hpp"

namespace optowork::sweep {

inline constexpr int kDefaultPresetPoints = 201;

struct Preset {
  std::string id;
  std::vector<std::string> aliases;
  std::string description;
  SweepConfig config;
  // Parameter values chosen here rather than given with the target plot.
  std::vector<std::string> approximations;
};

const std::vector<Preset>& presets();

// Resolves an id or alias; throws UnknownPreset.
const Preset& find_preset(std::string_view id);

SweepConfig preset_config(std::string_view id, int points = kDefaultPresetPoints);

Dataset run_figure_preset(std::string_view id, int points = kDefaultPresetPoints,
                          double kbt = 1.0, int threads = 1);

}  // namespace optowork::sweep
