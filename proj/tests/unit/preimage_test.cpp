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

#include "tentlab/preimage/preimage.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tentlab/dynamics/tent_map.hpp"
#include "tentlab/errors.hpp"
#include "test_support.hpp"

namespace tentlab {
namespace {

TEST(Preimages, Examples) {
  const auto hundred = TentParams::with_bound(ExactRational(100));
  const auto p = preimages_of(ExactRational(48), hundred);
  EXPECT_EQ(p.left, ExactRational(24));
  EXPECT_EQ(p.right, ExactRational(76));
  EXPECT_FALSE(p.single());

  const auto peak = preimages_of(ExactRational(100), hundred);
  EXPECT_TRUE(peak.single());
  EXPECT_EQ(peak.left, ExactRational(50));

  const auto zero = preimages_of(ExactRational(0), TentParams::with_bound(ExactRational(1)));
  EXPECT_EQ(zero.left, ExactRational(0));
  EXPECT_EQ(zero.right, ExactRational(1));
}

TEST(Preimages, Errors) {
  EXPECT_THROW(preimages_of(ExactRational(2), TentParams::with_bound(ExactRational(1))), DomainError);
  EXPECT_THROW(preimages_of(ExactRational(0), TentParams{ExactRational(3), ExactRational(1)}), ConfigError);
}

TEST(Preimages, InverseCorrectness) {
  std::mt19937_64 rng(17);
  for (const auto& bound : {ExactRational(1), ExactRational(100), parse_decimal("100.0001")}) {
    const auto params = TentParams::with_bound(bound);
    const TentMap map(params, Backend::rational());
    for (int i = 0; i < 1000; ++i) {
      const ExactRational x = testing::random_rational(rng, bound);
      const auto p = preimages_of(x, params);
      ASSERT_EQ(map.step(p.left), x);
      ASSERT_EQ(map.step(p.right), x);
      ASSERT_LE(p.left.times_pow2(1), bound);
      ASSERT_GE(p.right.times_pow2(1), bound);
    }
  }
}

}  // namespace
}  // namespace tentlab
