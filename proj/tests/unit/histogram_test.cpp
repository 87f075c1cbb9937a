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

#include "tentlab/harness/histogram.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

TEST(Histogram, PerfectlyUniform) {
  std::vector<double> v;
  for (int b = 0; b < 20; ++b) v.insert(v.end(), 7, 5.0 * b + 2.5);
  const auto h = build_histogram(v, 100.0, 20);
  EXPECT_EQ(h.total, 140U);
  EXPECT_DOUBLE_EQ(h.sup_norm, 0.0);
  EXPECT_DOUBLE_EQ(h.chi_square, 0.0);
}

TEST(Histogram, AllMassInOneBin) {
  const std::vector<double> v(1000, 42.0);
  const auto h = build_histogram(v, 100.0, 20);
  EXPECT_DOUBLE_EQ(h.sup_norm, 0.95);
  // (1000 - 50)^2 / 50 + 19 * 50
  EXPECT_DOUBLE_EQ(h.chi_square, 950.0 * 950.0 / 50.0 + 19 * 50.0);
}

TEST(Histogram, SpikesOverTheTenCycle) {
  std::vector<double> v;
  for (int r = 0; r < 50; ++r) {
    for (const double c : {8, 16, 24, 32, 48, 56, 64, 72, 88, 96}) v.push_back(c);
  }
  const auto h = build_histogram(v, 100.0, 20);
  // Bins of width 5: each cycle value lands in its own bin.
  const std::vector<std::size_t> occupied = {1, 3, 4, 6, 9, 11, 12, 14, 17, 19};
  for (std::size_t b = 0; b < 20; ++b) {
    const bool hit = std::find(occupied.begin(), occupied.end(), b) != occupied.end();
    EXPECT_EQ(h.counts[b], hit ? 50U : 0U) << b;
  }
}

TEST(Histogram, EdgesAndConservation) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::vector<double> v = {0.0, 100.0, 5.0};
  for (int i = 0; i < 9997; ++i) v.push_back(u(rng));
  const auto h = build_histogram(v, 100.0, 20);
  std::size_t sum = 0;
  for (const auto c : h.counts) sum += c;
  EXPECT_EQ(sum, v.size());
  // 5.0 opens the second bin; N closes the last one.
  const auto edge = build_histogram(std::vector<double>{5.0, 100.0}, 100.0, 20);
  EXPECT_EQ(edge.counts[1], 1U);
  EXPECT_EQ(edge.counts[19], 1U);
}

TEST(Histogram, Errors) {
  EXPECT_THROW(build_histogram(std::vector<double>{}, 100.0, 20), DomainError);
  EXPECT_THROW(build_histogram(std::vector<double>{101.0}, 100.0, 20), DomainError);
  EXPECT_THROW(build_histogram(std::vector<double>{1.0}, 100.0, 1), DomainError);
  Histogram empty;
  empty.counts.assign(4, 0);
  EXPECT_THROW(uniformity_metrics(empty), DomainError);
}

TEST(Histogram, Csv) {
  const auto h = build_histogram(std::vector<double>{0.1, 0.9}, 1.0, 2);
  EXPECT_EQ(to_csv(h), "bin_lo,bin_hi,count\n0,0.5,1\n0.5,1,1\n");
}

}  // namespace
}  // namespace tentlab
