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

#include "tentlab/preimage/backward_walk.hpp"

#include <gtest/gtest.h>

#include "tentlab/errors.hpp"
#include "tentlab/preimage/preimage.hpp"

namespace tentlab {
namespace {

const TentParams kHundred = TentParams::with_bound(ExactRational(100));

TEST(BackwardWalk, OneStepIsAPreimage) {
  const ExactRational start = parse_decimal("67.2");
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const auto w = backward_random_walk(start, 1, seed, kHundred);
    ASSERT_EQ(w.values.size(), 2U);
    const auto p = preimages_of(start, kHundred);
    EXPECT_TRUE(w.values[1] == p.left || w.values[1] == p.right);
    EXPECT_EQ(w.values[1], w.choices[0] == 0 ? p.left : p.right);
  }
}

TEST(BackwardWalk, Deterministic) {
  const auto a = backward_random_walk(parse_decimal("67.2"), 500, 99, kHundred);
  const auto b = backward_random_walk(parse_decimal("67.2"), 500, 99, kHundred);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.choices, b.choices);
  EXPECT_EQ(to_csv(a), to_csv(b));
  const auto c = backward_random_walk(parse_decimal("67.2"), 500, 100, kHundred);
  EXPECT_NE(a.choices, c.choices);
}

TEST(BackwardWalk, ExactReproductionForward) {
  const auto w = backward_random_walk(parse_decimal("67.2"), 300, 5, kHundred);
  const TentMap map(kHundred, Backend::rational());
  for (std::size_t k = 1; k < w.values.size(); ++k) ASSERT_EQ(map.step(w.values[k]), w.values[k - 1]);
  EXPECT_FALSE(w.truncated_from.has_value());
}

TEST(BackwardWalk, NonIntegerStartNeverBecomesInteger) {
  const auto w = backward_random_walk(parse_decimal("67.2"), 2000, 3, kHundred);
  for (const auto& v : w.values) ASSERT_FALSE(v.is_integer());
  // The 1/5 factor survives, so no value is dyadic either.
  EXPECT_FALSE(w.deepest().is_dyadic());
}

TEST(BackwardWalk, PeakConsumesABit) {
  const auto w = backward_random_walk(ExactRational(100), 1, 0, kHundred);
  EXPECT_EQ(w.values[1], ExactRational(50));
  EXPECT_EQ(w.choices.size(), 1U);
}

TEST(BackwardWalk, PrecisionCapTruncates) {
  const auto w = backward_random_walk(parse_decimal("67.2"), 40, 8, kHundred, 16);
  ASSERT_TRUE(w.truncated_from.has_value());
  EXPECT_EQ(*w.truncated_from, 17U);
  const auto exact = backward_random_walk(parse_decimal("67.2"), 40, 8, kHundred);
  for (std::size_t k = 0; k < *w.truncated_from; ++k) EXPECT_EQ(w.values[k], exact.values[k]);
  for (std::size_t k = *w.truncated_from; k < w.values.size(); ++k) {
    // Truncated values stay on the lattice 1 / (5 * 2^16).
    EXPECT_TRUE((w.values[k] * ExactRational(5 * 65536)).is_integer());
    EXPECT_LE(w.values[k], ExactRational(100));
  }
}

TEST(BackwardWalk, PrefixAndCsv) {
  const auto w = backward_random_walk(parse_decimal("0.4"), 10, 1, TentParams::with_bound(ExactRational(1)));
  const auto p = w.prefix(3);
  EXPECT_EQ(p.steps(), 3U);
  EXPECT_EQ(p.deepest(), w.values[3]);
  EXPECT_THROW(w.prefix(11), DomainError);
  const std::string csv = to_csv(p);
  EXPECT_EQ(csv.rfind("step,value,choice\n0,0.4,\n1,", 0), 0U);
}

TEST(ForwardConsistency, ExactReproducesFixedPointCollapses) {
  const auto walk = backward_random_walk(parse_decimal("67.2"), 40, 12345, kHundred);
  const auto r = forward_consistency_check(walk, PrecisionSpec{8, 20});
  EXPECT_TRUE(r.exact_reproduction);
  EXPECT_EQ(r.exact_steps_checked, 40U);
  ASSERT_TRUE(r.first_divergence_step.has_value());
  ASSERT_TRUE(r.terminal.found());
  EXPECT_TRUE(r.terminal.all_cycle_values_even_integers);
  EXPECT_EQ(to_json(r)["exact_reproduction"], true);
}

TEST(ForwardConsistency, DyadicWalkTracksUntilRounding) {
  // A dyadic start on a fine grid is reproduced in fixed point while the
  // grid still holds the walk values.
  const auto walk = backward_random_walk(ExactRational(40), 4, 2, kHundred);
  const auto r = forward_consistency_check(walk, PrecisionSpec{8, 8});
  EXPECT_TRUE(r.exact_reproduction);
  EXPECT_FALSE(r.first_divergence_step.has_value());
}

}  // namespace
}  // namespace tentlab
