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

#include <gtest/gtest.h>

#include <set>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

std::int64_t step(std::int64_t x, std::int64_t n) { return 2 * x < n ? 2 * x : 2 * (n - x); }

// Brute force: every integer whose forward orbit meets the cycle.
std::set<std::int64_t> brute_basin(const std::vector<std::int64_t>& cycle, std::int64_t n) {
  const std::set<std::int64_t> members(cycle.begin(), cycle.end());
  std::set<std::int64_t> out;
  for (std::int64_t x = 0; x <= n; ++x) {
    std::int64_t y = x;
    for (std::int64_t k = 0; k <= 4 * n + 8; ++k, y = step(y, n)) {
      if (members.count(y) != 0) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

std::set<std::int64_t> keys(const BasinForest& f) {
  std::set<std::int64_t> out;
  for (const auto& [v, node] : f.nodes) out.insert(v);
  return out;
}

const std::vector<std::int64_t> kTen = {8, 16, 32, 64, 72, 56, 88, 24, 48, 96};

TEST(BasinForest, FixedPointOfHundred) {
  const auto f = integer_basin_forest({0}, 100);
  EXPECT_EQ(keys(f), (std::set<std::int64_t>{0, 25, 50, 75, 100}));
  EXPECT_EQ(keys(f), brute_basin({0}, 100));
}

TEST(BasinForest, TwoCycleContainsEightyFive) {
  const auto f = integer_basin_forest({40, 80}, 100);
  EXPECT_TRUE(f.contains(85));
  EXPECT_EQ(f.nodes.at(85).successor, 30);
  EXPECT_EQ(f.nodes.at(30).successor, 60);
  EXPECT_EQ(f.nodes.at(60).successor, 80);
  EXPECT_EQ(keys(f), brute_basin({40, 80}, 100));
}

TEST(BasinForest, ThreeForestsPartitionHundred) {
  std::set<std::int64_t> all;
  std::size_t total = 0;
  for (const auto& cycle : {kTen, std::vector<std::int64_t>{40, 80}, std::vector<std::int64_t>{0}}) {
    const auto f = integer_basin_forest(cycle, 100);
    EXPECT_EQ(keys(f), brute_basin(cycle, 100));
    total += f.nodes.size();
    for (const auto v : keys(f)) EXPECT_TRUE(all.insert(v).second) << v;
  }
  EXPECT_EQ(total, 101U);
}

TEST(BasinForest, OddNodesAreLeavesAndEdgesPointForward) {
  for (const std::int64_t n : {16, 100, 101, 1000}) {
    std::set<std::int64_t> seen;
    for (std::int64_t x = 0; x <= n; ++x) {
      if (seen.count(x) != 0) continue;
      // Walk forward to a cycle and build its forest.
      std::vector<std::int64_t> orbit{x};
      std::set<std::int64_t> visited{x};
      while (visited.insert(step(orbit.back(), n)).second) orbit.push_back(step(orbit.back(), n));
      const std::int64_t entry = step(orbit.back(), n);
      std::vector<std::int64_t> cycle{entry};
      for (std::int64_t y = step(entry, n); y != entry; y = step(y, n)) cycle.push_back(y);
      const auto f = integer_basin_forest(cycle, n);
      for (const auto& [v, node] : f.nodes) {
        seen.insert(v);
        ASSERT_EQ(step(v, n), node.successor);
        if (v % 2 != 0) ASSERT_TRUE(f.children(v).empty());
        if (!f.is_cycle_member(v)) ASSERT_EQ(f.nodes.at(node.successor).depth + 1, node.depth);
      }
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(n + 1));
  }
}

TEST(BasinForest, RejectsNonCycles) {
  EXPECT_THROW(integer_basin_forest({40}, 100), DomainError);
  EXPECT_THROW(integer_basin_forest({80, 40, 80}, 100), DomainError);
  EXPECT_THROW(integer_basin_forest({}, 100), DomainError);
  EXPECT_THROW(integer_basin_forest({0}, 0), DomainError);
  EXPECT_THROW(integer_basin_forest({200}, 100), DomainError);
}

TEST(BasinForest, Serialisation) {
  const auto f = integer_basin_forest({0}, 100);
  EXPECT_EQ(edges_csv(f), "parent,child,depth\n0,100,1\n100,50,2\n50,25,3\n50,75,3\n");
  const auto j = cycle_json(f);
  EXPECT_EQ(j["node_count"], 5);
  EXPECT_EQ(j["max_depth"], 3);
  EXPECT_EQ(j["leaves"], nlohmann::json({25, 75}));
  EXPECT_EQ(render_tree(f), "0 *\n  100\n    50\n      25\n      75\n");
}

}  // namespace
}  // namespace tentlab
