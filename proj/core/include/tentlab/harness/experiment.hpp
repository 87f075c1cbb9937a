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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tentlab/harness/report.hpp"

namespace tentlab {

// Resolved inputs of one run. Numbers stay as decimal text until the
// experiment parses them exactly.
struct ExperimentConfig {
  std::string experiment;  // subcommand or repro id
  std::string a = "2";
  std::string N = "100";
  std::string x0 = "67.2";
  std::string backend = "f64";
  std::size_t steps = 100;
  std::size_t bins = 20;
  std::uint64_t seed = 12345;
  std::size_t max_steps = 10'000'000;
  std::size_t precision_cap = 4096;
  std::optional<std::vector<std::int64_t>> cycle;  // basin: explicit root cycle
  std::filesystem::path out_dir = "out";
};

// Subcommands runnable directly.
const std::vector<std::string>& experiment_commands();
// Ids accepted by "repro".
const std::vector<std::string>& repro_ids();

// The configuration a repro id stands for.
ExperimentConfig repro_config(const std::string& id);

// Runs an experiment in memory. Throws ConfigError / ParseError /
// DomainError on bad input.
ReportBundle run_experiment(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);

}  // namespace tentlab
