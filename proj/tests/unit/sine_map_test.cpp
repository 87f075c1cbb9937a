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

#include "tentlab/dynamics/sine_map.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "tentlab/binary/float_rounding.hpp"
#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

TEST(SineMap, FixedPointsAndPeak) {
  EXPECT_EQ(sine_map_step(0.0), 0.0);
  EXPECT_EQ(sine_map_step(0.5), 1.0);
  EXPECT_NEAR(sine_map_step(1.0), 0.0, 1e-15);
  EXPECT_THROW(sine_map_step(1.5), DomainError);
  EXPECT_THROW(sine_map_step(-0.1), DomainError);
}

TEST(SineMap, ShortOrbitsAndBudget) {
  const auto zero = detect_sine_cycle(0.0, 10);
  ASSERT_TRUE(zero.found());
  EXPECT_EQ(zero.transient, 0U);
  EXPECT_EQ(zero.period, 1U);
  EXPECT_TRUE(zero.all_cycle_values_even_integers);

  // 0.5 -> 1 -> sin(pi) (tiny, not 0) -> ... : the report must obey the budget.
  const auto half = detect_sine_cycle(0.5, 1000);
  if (half.found()) {
    EXPECT_LE(half.transient + half.period, 1000U);
  } else {
    EXPECT_EQ(half.steps_taken, 1000U);
  }

  // Brent against the visited-state index on the same orbit.
  const auto indexed = detail::find_cycle<double>(0.5, sine_map_step, 1000);
  EXPECT_EQ(indexed.found, half.found());
  if (indexed.found) {
    EXPECT_EQ(indexed.transient, half.transient);
    EXPECT_EQ(indexed.period, half.period);
  }
}

// Regression oracle for the binary64 orbit of 0.4, frozen from the first run
// (glibc libm sin on x86-64). Transient and period are far beyond 10^7.
TEST(SineMap, PointFourRegression) {
  const auto r = detect_sine_cycle(0.4, 100'000'000);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.transient, 29'625'269U);
  EXPECT_EQ(r.period, 46'253'470U);
  EXPECT_FALSE(r.cycle_complete);
  ASSERT_FALSE(r.cycle.empty());
  EXPECT_EQ(to_binary64(r.cycle.front()), 0.99999999999999778);
}

}  // namespace
}  // namespace tentlab
