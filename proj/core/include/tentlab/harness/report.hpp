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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tentlab {

struct OutputFile {
  std::string name;  // relative to the output directory
  std::string content;
};

// Everything one experiment produces: a summary for the manifest plus the data
// files. Assembled in memory so that emission is a single deterministic pass.
struct ReportBundle {
  nlohmann::json config;   // echo of the resolved configuration
  nlohmann::json summary;  // experiment-specific findings
  nlohmann::json notes = nlohmann::json::array();
  std::vector<OutputFile> files;

  void add(std::string name, std::string content) { files.push_back({std::move(name), std::move(content)}); }
  void add_json(std::string name, const nlohmann::json& j) { add(std::move(name), j.dump(2) + "\n"); }
};

// Lower-case hex SHA-256 of content.
std::string sha256_hex(const std::string& content);

// Writes every file under dir plus manifest.json listing each file with its
// size and digest. Returns the manifest. Throws std::runtime_error on I/O
// failure.
nlohmann::json emit_report(const ReportBundle& bundle, const std::filesystem::path& dir);

// The manifest emit_report would write, without touching the filesystem.
nlohmann::json build_manifest(const ReportBundle& bundle);

}  // namespace tentlab
