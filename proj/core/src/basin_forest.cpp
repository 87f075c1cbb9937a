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

#include "tentlab/preimage/basin_forest.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

std::int64_t integer_tent(std::int64_t x, std::int64_t bound) { return 2 * x < bound ? 2 * x : 2 * (bound - x); }

void render_subtree(const BasinForest& forest, std::int64_t v, std::size_t indent, std::ostringstream& os) {
  for (const std::int64_t child : forest.children(v)) {
    os << std::string(2 * indent, ' ') << child << '\n';
    render_subtree(forest, child, indent + 1, os);
  }
}

}  // namespace

bool BasinForest::is_cycle_member(std::int64_t v) const {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

std::vector<std::int64_t> BasinForest::children(std::int64_t v) const {
  std::vector<std::int64_t> out;
  if (v % 2 != 0) return out;
  for (const std::int64_t c : {v / 2, bound - v / 2}) {
    if (contains(c) && !is_cycle_member(c) && nodes.at(c).successor == v &&
        std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BasinForest::max_depth() const {
  std::size_t d = 0;
  for (const auto& [v, node] : nodes) d = std::max(d, node.depth);
  return d;
}

BasinForest integer_basin_forest(const std::vector<std::int64_t>& cycle, std::int64_t bound) {
  if (bound < 1) throw DomainError("basin forest: N must be a positive integer");
  if (cycle.empty()) throw DomainError("basin forest: empty cycle");
  const std::set<std::int64_t> members(cycle.begin(), cycle.end());
  if (members.size() != cycle.size()) throw DomainError("basin forest: repeated cycle element");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::int64_t v = cycle[i];
    if (v < 0 || v > bound) throw DomainError("basin forest: cycle element outside [0, N]");
    const std::int64_t next = cycle[(i + 1) % cycle.size()];
    if (integer_tent(v, bound) != next) {
      throw DomainError("basin forest: " + std::to_string(v) + " maps to " + std::to_string(integer_tent(v, bound)) +
                        ", not " + std::to_string(next) + "; not a cycle of the map");
    }
  }

  BasinForest forest;
  forest.bound = bound;
  forest.cycle = cycle;
  std::deque<std::int64_t> queue;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    forest.nodes[cycle[i]] = {cycle[(i + 1) % cycle.size()], 0};
    queue.push_back(cycle[i]);
  }
  while (!queue.empty()) {
    const std::int64_t v = queue.front();
    queue.pop_front();
    if (v % 2 != 0) continue;
    const std::size_t depth = forest.nodes[v].depth + 1;
    for (const std::int64_t pre : {v / 2, bound - v / 2}) {
      if (forest.nodes.try_emplace(pre, BasinForest::Node{v, depth}).second) queue.push_back(pre);
    }
  }
  return forest;
}

std::string edges_csv(const BasinForest& forest) {
  std::vector<std::tuple<std::size_t, std::int64_t, std::int64_t>> rows;
  for (const auto& [v, node] : forest.nodes) {
    if (node.depth > 0) rows.emplace_back(node.depth, node.successor, v);
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << "parent,child,depth\n";
  for (const auto& [depth, parent, child] : rows) os << parent << ',' << child << ',' << depth << '\n';
  return os.str();
}

nlohmann::json cycle_json(const BasinForest& forest) {
  nlohmann::json leaves = nlohmann::json::array();
  for (const auto& [v, node] : forest.nodes) {
    if (!forest.is_cycle_member(v) && forest.children(v).empty()) leaves.push_back(v);
  }
  return {
      {"bound", forest.bound},
      {"cycle", forest.cycle},
      {"period", forest.cycle.size()},
      {"node_count", forest.nodes.size()},
      {"max_depth", forest.max_depth()},
      {"leaves", std::move(leaves)},
  };
}

std::string render_tree(const BasinForest& forest) {
  std::ostringstream os;
  for (const std::int64_t c : forest.cycle) {
    os << c << " *\n";
    render_subtree(forest, c, 1, os);
  }
  return os.str();
}

}  // namespace tentlab
