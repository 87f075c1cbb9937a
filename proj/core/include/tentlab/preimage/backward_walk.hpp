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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tentlab/binary/fixed_binary.hpp"
#include "tentlab/dynamics/orbit.hpp"

namespace tentlab {

// Name of the generator behind every backward walk. std::mt19937_64 is fully
// specified by the C++ standard, so walks are reproducible across platforms;
// one output word is drawn per step and its top bit is the branch choice.
inline constexpr const char* kWalkRngName = "mt19937_64/top-bit";

inline constexpr std::size_t kDefaultPrecisionCap = 4096;

// A sequence x_0 = start, x_{-1}, ..., x_{-steps} where each value is a
// preimage of the one before it. values[k] holds x_{-k}; choices[k-1] is the
// branch taken to reach it (0 = left, x/2; 1 = right, N - x/2).
//
// Values are exact until the power of two in their denominator exceeds the
// precision cap; from then on each new value is truncated toward zero onto
// the lattice 1 / (odd * 2^cap), where odd is the odd part of the starting
// lattice. truncated_from records the first truncated index.
struct BackwardWalk {
  std::uint64_t seed = 0;
  std::string rng = kWalkRngName;
  TentParams params;
  std::size_t precision_cap = kDefaultPrecisionCap;
  std::vector<ExactRational> values;
  std::vector<std::uint8_t> choices;
  std::optional<std::size_t> truncated_from;

  std::size_t steps() const { return choices.size(); }
  const ExactRational& start() const { return values.front(); }
  const ExactRational& deepest() const { return values.back(); }

  // The first n steps of this walk (a prefix is itself a walk).
  BackwardWalk prefix(std::size_t n) const;
};

// Deterministic in (start, steps, seed, params, cap). At x = N both branches
// give N/2 and a random bit is still consumed. Requires a = 2, 0 <= start <= N.
BackwardWalk backward_random_walk(const ExactRational& start, std::size_t steps, std::uint64_t seed,
                                  const TentParams& params, std::size_t precision_cap = kDefaultPrecisionCap);

// "step,value,choice" rows; step is k for x_{-k}, value truncated to
// decimal_digits fractional digits, choice empty on the start row.
std::string to_csv(const BackwardWalk& walk, std::size_t decimal_digits = 20);

struct ConsistencyReport {
  // Exact forward iteration from the deepest value reproduces the walk.
  bool exact_reproduction = false;
  // Number of forward steps compared in exact arithmetic (0 when the walk
  // was truncated, since reproduction is only defined on exact values).
  std::size_t exact_steps_checked = 0;
  // First forward step t at which the fixed-point orbit from rho(x_{-p})
  // differs from x_{-p+t}; nullopt if it tracked the whole walk.
  std::optional<std::size_t> first_divergence_step;
  OrbitReport terminal;
};

// Runs the walk forward twice from its deepest value: exactly, and in fixed
// point under spec (after rounding the starting value once).
ConsistencyReport forward_consistency_check(const BackwardWalk& walk, PrecisionSpec spec,
                                            std::size_t max_steps = 1'000'000);

nlohmann::json to_json(const ConsistencyReport& report);

}  // namespace tentlab
