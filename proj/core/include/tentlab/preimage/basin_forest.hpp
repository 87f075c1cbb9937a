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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tentlab {

// Integer points of [0, N] whose orbits under the slope-2 tent map enter a
// given integer cycle, organised as preimage trees hanging off the cycle.
//
// Cycle members have depth 0 and their successor inside the cycle. Every
// other node points at its image (one step closer to the cycle).
struct BasinForest {
  struct Node {
    std::int64_t successor = 0;
    std::size_t depth = 0;
  };

  std::int64_t bound = 0;
  std::vector<std::int64_t> cycle;
  std::map<std::int64_t, Node> nodes;

  bool contains(std::int64_t v) const { return nodes.count(v) != 0; }
  bool is_cycle_member(std::int64_t v) const;
  // Integer preimages of v inside the forest, excluding cycle members.
  std::vector<std::int64_t> children(std::int64_t v) const;
  std::size_t max_depth() const;
};

// Breadth-first enumeration of integer preimages starting from the cycle.
// Only even values have integer preimages (v/2 and N - v/2). The cycle may be
// given starting at any of its members; DomainError if it is not a single
// cycle of the map on integers in [0, N].
BasinForest integer_basin_forest(const std::vector<std::int64_t>& cycle, std::int64_t bound);

// "parent,child,depth" rows; parent is the image, child the preimage.
std::string edges_csv(const BasinForest& forest);

// Cycle manifest: bound, cycle, node count, depth, leaves.
nlohmann::json cycle_json(const BasinForest& forest);

// Indented tree rendering, one node per line.
std::string render_tree(const BasinForest& forest);

}  // namespace tentlab
