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

// optowork: figure presets, parameter sweeps and the invariant self-check.
//
//   optowork preset <id> --out <path> [--points N] [--kbt V]
//   optowork sweep --config <file> --out <path>
//   optowork check
//
// Exit codes: 0 success, 1 config error, 2 domain/stability error,
// 3 I/O error, 4 self-check failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "optowork/errors.hpp"
#include "optowork/presets.hpp"
#include "optowork/self_check.hpp"
#include "optowork/sweep.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfig = 1, kDomain = 2, kIo = 3, kCheckFailed = 4 };

int run_check() {
  const auto results = optowork::self_check();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-32s worst=%.3e tol=%.1e  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.worst, r.tolerance, r.detail.c_str());
    failed += r.passed ? 0 : 1;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and extractable work in optomechanical Gaussian states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(optowork::sweep::code_version()));

  std::string preset_id;
  std::string out_path;
  int points = optowork::sweep::kDefaultPresetPoints;
  double kbt = 1.0;
  int threads = 1;

  auto* preset = app.add_subcommand("preset", "Run a figure-reproduction preset");
  preset->add_option("id", preset_id, "Preset id or alias (fig3 fig4 fig5 fig7 fig8 fig9 fig10 fig11)")
      ->required();
  preset->add_option("--out", out_path, "Output CSV path")->required();
  preset->add_option("--points", points, "Grid points per curve")->check(CLI::Range(2, 1000000));
  preset->add_option("--kbt", kbt, "Scale all work columns by this k_B*T")
      ->check(CLI::PositiveNumber);
  preset->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep described by a key=value config file");
  sweep_cmd->add_option("--config", config_path, "Config file")->required();
  sweep_cmd->add_option("--out", out_path, "Output CSV path (overrides output_path)");
  sweep_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* check = app.add_subcommand("check", "Run the invariant self-check suite");
  auto* list = app.add_subcommand("list", "List figure presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (check->parsed()) {
      return run_check();
    }
    if (list->parsed()) {
      for (const auto& p : optowork::sweep::presets()) {
        std::cout << p.id << "  " << p.description << "\n";
      }
      return kOk;
    }
    if (preset->parsed()) {
      const auto d = optowork::sweep::run_figure_preset(preset_id, points, kbt, threads);
      optowork::sweep::emit_csv(d, out_path);
      return kOk;
    }
    if (sweep_cmd->parsed()) {
      auto config = optowork::sweep::load_config(config_path);
      if (!out_path.empty()) {
        config.output_path = out_path;
      }
      if (config.output_path.empty()) {
        throw optowork::ConfigError("no output path: pass --out or set output_path");
      }
      const auto d = optowork::sweep::sweep(config, threads);
      optowork::sweep::emit_csv(d, config.output_path);
      return kOk;
    }
  } catch (const optowork::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const optowork::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const optowork::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
