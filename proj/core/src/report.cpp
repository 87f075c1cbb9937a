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

#include "tentlab/harness/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <stdexcept>

namespace tentlab {

std::string sha256_hex(const std::string& content) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(content.data(), content.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

nlohmann::json build_manifest(const ReportBundle& bundle) {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& f : bundle.files) {
    files.push_back({{"name", f.name}, {"bytes", f.content.size()}, {"sha256", sha256_hex(f.content)}});
  }
  return {
      {"config", bundle.config},
      {"summary", bundle.summary},
      {"notes", bundle.notes},
      {"files", std::move(files)},
  };
}

nlohmann::json emit_report(const ReportBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  const auto write = [&dir](const std::string& name, const std::string& content) {
    const auto path = dir / name;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << content;
    os.close();
    if (!os) throw std::runtime_error("cannot write " + path.string());
  };
  for (const auto& f : bundle.files) write(f.name, f.content);
  nlohmann::json manifest = build_manifest(bundle);
  write("manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

}  // namespace tentlab
