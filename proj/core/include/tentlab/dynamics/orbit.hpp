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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "tentlab/dynamics/tent_map.hpp"

namespace tentlab {

enum class OrbitStatus { kCycleFound, kBudgetExhausted };

// Outcome of following one computed trajectory until a state repeats.
//
// With status kCycleFound, states transient .. transient + period - 1 form the
// cycle and cycle[] lists them in visiting order. kBudgetExhausted means no
// state repeated within the step budget; cycle[] is then empty.
struct OrbitReport {
  std::string x0_given;
  ExactRational x0_represented;
  std::string backend;
  OrbitStatus status = OrbitStatus::kBudgetExhausted;
  std::size_t transient = 0;
  std::size_t period = 0;
  std::vector<ExactRational> cycle;
  std::optional<std::size_t> first_integer_step;
  bool all_cycle_values_even_integers = false;
  // False when only a prefix of a very long cycle is listed in cycle[].
  bool cycle_complete = true;
  // Number of map applications performed.
  std::size_t steps_taken = 0;

  bool found() const { return status == OrbitStatus::kCycleFound; }
};

nlohmann::json to_json(const OrbitReport& report);

// Follows x0 under the map until a state repeats or max_steps applications
// have been made. The finite backends always terminate for a large enough
// budget; for the rational backend the budget is the only guard.
OrbitReport detect_cycle(const TentMap& map, const State& x0, std::size_t max_steps);
OrbitReport detect_cycle(std::string_view x0_decimal, const TentParams& params, const Backend& backend,
                         std::size_t max_steps);

namespace detail {

// Raw result of a visited-state search. trajectory holds x_0 .. x_k where
// x_k is either the first repeated state (found) or the last state reached.
template <class T>
struct CycleSearch {
  std::vector<T> trajectory;
  bool found = false;
  std::size_t transient = 0;
  std::size_t period = 0;
};

// Visited-state index: state -> first step at which it was seen.
template <class T, class Step, class Hash = std::hash<T>>
CycleSearch<T> find_cycle(T x0, Step&& step, std::size_t max_steps, Hash hash = Hash{}) {
  CycleSearch<T> out;
  std::unordered_map<T, std::size_t, Hash> seen(16, hash);
  out.trajectory.push_back(x0);
  seen.emplace(std::move(x0), 0);
  for (std::size_t t = 1; t <= max_steps; ++t) {
    T next = step(out.trajectory.back());
    auto [it, inserted] = seen.try_emplace(next, t);
    out.trajectory.push_back(std::move(next));
    if (!inserted) {
      out.found = true;
      out.transient = it->second;
      out.period = t - it->second;
      return out;
    }
  }
  return out;
}

}  // namespace detail
}  // namespace tentlab
