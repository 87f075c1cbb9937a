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

#include "tentlab/dynamics/error_series.hpp"

#include <gtest/gtest.h>

namespace tentlab {
namespace {

TEST(ErrorAccumulation, FiveBitDeviations) {
  const auto s = error_accumulation(parse_decimal("0.4"), TentParams::with_bound(ExactRational(1)),
                                    Backend::fixed({1, 4}), 10);
  // Computed 0.375, 0.75, 0.5, 1, 0, 0, ... against the exact 0.4, 0.8, 0.4, ...
  const std::vector<const char*> expected = {"0.025", "0.05", "0.1", "0.2", "0.4", "0.8",
                                             "0.4",   "0.8",  "0.4", "0.8", "0.4"};
  ASSERT_EQ(s.deviations.size(), expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t) EXPECT_EQ(s.deviations[t], parse_decimal(expected[t])) << t;
  EXPECT_EQ(s.total(), parse_decimal("4.375"));
}

TEST(ErrorAccumulation, LinearGrowthAfterCollapse) {
  const auto s = error_accumulation(parse_decimal("0.4"), TentParams::with_bound(ExactRational(1)),
                                    Backend::fixed({1, 4}), 1000);
  for (std::size_t t = 7; t <= 1000; ++t) {
    ASSERT_GE(s.running_sum[t], parse_decimal("0.6") * ExactRational(static_cast<std::int64_t>(t - 5))) << t;
  }
  for (std::size_t t = 1; t <= 1000; ++t) ASSERT_GE(s.running_sum[t], s.running_sum[t - 1]);
}

TEST(ErrorAccumulation, ZeroOnExactOrbits) {
  const auto params = TentParams::with_bound(ExactRational(100));
  for (const char* backend : {"rational", "f64", "f32", "fixed:8,4"}) {
    const auto s = error_accumulation(ExactRational(40), params, Backend::parse(backend), 50);
    EXPECT_TRUE(s.total().is_zero()) << backend;
  }
  const auto exact = error_accumulation(parse_decimal("67.2"), params, Backend::rational(), 200);
  EXPECT_TRUE(exact.total().is_zero());
}

TEST(ErrorAccumulation, Csv) {
  const auto s = error_accumulation(parse_decimal("0.4"), TentParams::with_bound(ExactRational(1)),
                                    Backend::fixed({1, 4}), 2);
  EXPECT_EQ(to_csv(s), "t,E_t\n0,0.025\n1,0.075\n2,0.175\n");
}

}  // namespace
}  // namespace tentlab
