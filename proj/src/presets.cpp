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

#include "optowork/presets.hpp"

#include <numbers>

#include "optowork/errors.hpp"

namespace optowork::sweep {

namespace {

using Q = Quantity;

const std::vector<Quantity> kWitnessSet{Q::kW0,    Q::kW0Sep, Q::kW0Max, Q::kW1,
                                        Q::kW1Sep, Q::kW1Max};
const std::vector<Quantity> kDoubleSet{Q::kW0, Q::kW1, Q::kW00, Q::kW11};

std::vector<Quantity> with_negativity(Quantity ln) {
  std::vector<Quantity> q{ln};
  q.insert(q.end(), kWitnessSet.begin(), kWitnessSet.end());
  return q;
}

SweepConfig system1_config(std::string swept, Range range, std::map<std::string, double> fixed,
                           std::vector<Quantity> quantities, Subsystem subsystem, Family family) {
  SweepConfig c;
  c.system = 1;
  c.swept_parameter = std::move(swept);
  c.range = range;
  fixed.emplace("kappa", 1.0);
  fixed.emplace("gamma", 0.05);
  c.fixed_parameters = std::move(fixed);
  c.quantities = std::move(quantities);
  c.work_subsystem = subsystem;
  c.family = std::move(family);
  return c;
}

SweepConfig system2_config(std::vector<Quantity> quantities) {
  SweepConfig c;
  c.system = 2;
  c.swept_parameter = "phase";
  c.range = {0.0, 4.0 * std::numbers::pi, kDefaultPresetPoints};
  c.quantities = std::move(quantities);
  c.work_subsystem = Subsystem::kOptic;
  c.family = Family{"x", {1.5, 2.5}};
  return c;
}

std::vector<Preset> build() {
  const Range thermal{0.0, 5.0, kDefaultPresetPoints};
  const Range coop{0.0, 100.0, kDefaultPresetPoints};
  std::vector<Preset> all;

  all.push_back({"fig3",
                 {"mirror-nth", "bath"},
                 "mirror-mirror negativity and single-measurement work vs n_th",
                 system1_config("n_th", thermal, {{"C", 34.0}}, with_negativity(Q::kLnMirror),
                                Subsystem::kMirror, {"r", {0.5, 1.0, 1.5, 2.0}}),
                 {"r values read off the plot legend"}});
  all.push_back({"fig4",
                 {"mirror-coop", "coop"},
                 "mirror-mirror negativity and single-measurement work vs C",
                 system1_config("C", coop, {{"r", 1.5}}, with_negativity(Q::kLnMirror),
                                Subsystem::kMirror, {"n_th", {1.0, 2.0}}),
                 {"C axis range 0..100 chosen for the grid"}});
  all.push_back({"fig5",
                 {"optic-nth", "optic-optic"},
                 "optic-optic negativity and single-measurement work vs n_th",
                 system1_config("n_th", thermal, {{"C", 34.0}}, with_negativity(Q::kLnOptic),
                                Subsystem::kOptic, {"r", {0.5, 1.0, 1.5, 2.0}}),
                 {"r values read off the plot legend"}});
  all.push_back({"fig7",
                 {"mirror-double-nth", "figr7"},
                 "mirror-mirror single and double measurement work vs n_th",
                 system1_config("n_th", thermal, {{"C", 34.0}}, kDoubleSet, Subsystem::kMirror,
                                {"r", {1.0, 2.0}}),
                 {"C=34 assumed, as in fig3 and fig5",
                  "double-homodyne angles theta=pi/6, phi=0"}});
  all.push_back({"fig8",
                 {"mirror-double-coop", "figr8"},
                 "mirror-mirror single and double measurement work vs C",
                 system1_config("C", coop, {{"r", 1.5}}, kDoubleSet, Subsystem::kMirror,
                                {"n_th", {1.0, 2.0}}),
                 {"r=1.5 assumed, as in fig4",
                  "double-homodyne angles theta=pi/6, phi=0"}});
  all.push_back({"fig9",
                 {"optic-double-nth", "figr9"},
                 "optic-optic single and double measurement work vs n_th",
                 system1_config("n_th", thermal, {{"C", 34.0}}, kDoubleSet, Subsystem::kOptic,
                                {"r", {1.0, 2.0}}),
                 {"C=34 assumed, as in fig3 and fig5",
                  "double-homodyne angles theta=pi/6, phi=0"}});
  all.push_back({"fig10",
                 {"dynamics", "mo2"},
                 "system-2 optic-optic negativity and single-measurement work vs phase",
                 system2_config(with_negativity(Q::kLnOptic)),
                 {"x values 1.5 and 2.5 read off the plot legend"}});
  all.push_back({"fig11",
                 {"dynamics-double", "figr11"},
                 "system-2 optic-optic single and double measurement work vs phase",
                 system2_config(kDoubleSet),
                 {"double-homodyne angles theta=pi/6, phi=0"}});
  return all;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& find_preset(std::string_view id) {
  for (const auto& p : presets()) {
    if (p.id == id) {
      return p;
    }
    for (const auto& alias : p.aliases) {
      if (alias == id) {
        return p;
      }
    }
  }
  throw UnknownPreset("unknown preset '" + std::string(id) + "'");
}

SweepConfig preset_config(std::string_view id, int points) {
  SweepConfig c = find_preset(id).config;
  c.range.count = points;
  return c;
}

Dataset run_figure_preset(std::string_view id, int points, double kbt, int threads) {
  const Preset& p = find_preset(id);
  SweepConfig c = preset_config(id, points);
  c.kbt = kbt;
  Dataset d = sweep(c, threads);
  d.provenance.notes.insert(d.provenance.notes.begin(), "preset " + p.id + ": " + p.description);
  for (const auto& a : p.approximations) {
    d.provenance.notes.push_back("approximated: " + a);
  }
  return d;
}

}  // namespace optowork::sweep
