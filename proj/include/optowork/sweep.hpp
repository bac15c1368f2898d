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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace optowork::sweep {

enum class Quantity { kLnMirror, kLnOptic, kW0, kW1, kW0Sep, kW1Sep, kW0Max, kW1Max, kW00, kW11 };

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);
bool is_work(Quantity q);

enum class Subsystem { kMirror, kOptic };

std::string_view to_string(Subsystem s);

// Inclusive linear grid.
struct Range {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  // Ascending; endpoints reproduced exactly.
  std::vector<double> points() const;
};

// A swept curve repeated once per value of another parameter.
struct Family {
  std::string name;
  std::vector<double> values;
};

// Recognised parameter names:
//   system 1: kappa, gamma, C, G, r, n_th, theta, phi
//   system 2: x, phase, theta, phi
// theta/phi are the double-homodyne detector angles.
struct SweepConfig {
  int system = 1;
  std::string swept_parameter;
  Range range;
  std::map<std::string, double> fixed_parameters;
  std::vector<Quantity> quantities;
  std::optional<Subsystem> work_subsystem;  // default: mirror (1), optic (2)
  std::optional<Family> family;
  double kbt = 1.0;  // scales every work column
  std::string output_path;

  // Throws ConfigError.
  void validate() const;
  Subsystem effective_subsystem() const;
};

// Flat key = value text, '#' comments, ranges as start:stop:count.
SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const SweepConfig& config);

struct Provenance {
  std::string config_text;
  std::string code_version;
  std::string timestamp;  // UTC, ISO 8601
  std::vector<std::string> notes;
};

// Cells left empty are quantities undefined at that point (never NaN).
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  Provenance provenance;
};

std::string_view code_version();

// Evaluates every requested quantity at every grid point; rows are ordered
// by family value (as listed) then by the swept parameter ascending. Points
// may be evaluated on `threads` workers; output does not depend on it.
// Stability failures and domain errors raise DomainError naming the row.
Dataset sweep(const SweepConfig& config, int threads = 1);

// 17 significant digits, header row first.
std::string to_csv(const Dataset& d);
Dataset parse_csv(std::string_view text);

// Writes the CSV and a sibling "<stem>.meta.json" with the provenance.
// Throws IoError.
void emit_csv(const Dataset& d, const std::filesystem::path& path);

std::string metadata_json(const Dataset& d);

}  // namespace optowork::sweep
