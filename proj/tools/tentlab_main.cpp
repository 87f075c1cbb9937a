// Copyright 2026 The tentlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: one subcommand per experiment, plus "repro <id>"
// for the canned configurations.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tentlab/errors.hpp"
#include "tentlab/harness/experiment.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

void add_common_flags(CLI::App& cmd, tentlab::ExperimentConfig& c) {
  cmd.add_option("--N", c.N, "Domain bound N (decimal)")->capture_default_str();
  cmd.add_option("--a", c.a, "Slope a (decimal)")->capture_default_str();
  cmd.add_option("--x0", c.x0, "Initial value / walk start (decimal)")->capture_default_str();
  cmd.add_option("--backend", c.backend, "rational | fixed:p,q | f64 | f32")->capture_default_str();
  cmd.add_option("--steps", c.steps, "Iterations or walk length")->capture_default_str();
  cmd.add_option("--bins", c.bins, "Histogram bins")->capture_default_str();
  cmd.add_option("--seed", c.seed, "Backward-walk seed")->capture_default_str();
  cmd.add_option("--max-steps", c.max_steps, "Cycle-search budget")->capture_default_str();
  cmd.add_option("--precision-cap", c.precision_cap, "Backward-walk fractional bit cap")->capture_default_str();
  cmd.add_option("--out", c.out_dir, "Output directory")->capture_default_str();
}

const char* describe(const std::string& name) {
  if (name == "iterate") return "Iterate the tent map and write the trajectory";
  if (name == "cycle") return "Iterate until a state repeats; report transient and cycle";
  if (name == "basin") return "Integer preimage forest rooted at a cycle";
  if (name == "backward") return "Seeded random backward walk, histogram, forward check";
  if (name == "histogram") return "Forward-orbit histogram over [0, N]";
  if (name == "errsum") return "Accumulated deviation from the exact orbit";
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-precision tent map laboratory"};
  app.require_subcommand(1);

  tentlab::ExperimentConfig config;
  std::vector<std::int64_t> cycle;
  std::string repro_id;
  bool overrides_set = false;

  for (const auto& name : tentlab::experiment_commands()) {
    CLI::App* cmd = app.add_subcommand(name, describe(name));
    add_common_flags(*cmd, config);
    if (name == "basin") {
      cmd->add_option("--cycle", cycle, "Root cycle (comma separated); derived from --x0 when omitted")
          ->delimiter(',');
    }
    cmd->callback([&config, name] { config.experiment = name; });
  }

  CLI::App* repro = app.add_subcommand("repro", "Re-run a canned experiment");
  repro->add_option("id", repro_id, "Experiment id")->required()->check(CLI::IsMember(tentlab::repro_ids()));
  std::string out_dir = "out";
  std::string backend_override;
  repro->add_option("--out", out_dir, "Output directory")->capture_default_str();
  repro->add_option("--backend", backend_override, "Override the canned backend");
  repro->add_option("--seed", config.seed, "Override the canned seed")
      ->each([&overrides_set](const std::string&) { overrides_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (repro->parsed()) {
    const std::uint64_t seed = config.seed;
    config = tentlab::repro_config(repro_id);
    config.out_dir = out_dir;
    if (overrides_set) config.seed = seed;
    if (!backend_override.empty()) config.backend = backend_override;
  }
  if (!cycle.empty()) config.cycle = cycle;

  try {
    const tentlab::ReportBundle bundle = tentlab::run_experiment(config);
    for (const auto& note : bundle.notes) std::cerr << note.get<std::string>() << '\n';
    tentlab::emit_report(bundle, config.out_dir);
    std::cout << bundle.summary.dump(2) << '\n';
    std::cerr << "wrote " << (config.out_dir / "manifest.json").string() << '\n';
  } catch (const tentlab::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tentlab::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return EXIT_SUCCESS;
}
