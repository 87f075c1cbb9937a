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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "tentlab/binary/float_rounding.hpp"
#include "tentlab/errors.hpp"

namespace tentlab {

double sine_map_step(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("sine map: y outside [0, 1]");
  return std::sin(std::numbers::pi * y);
}

OrbitReport detect_sine_cycle(double y0, std::size_t max_steps) {
  if (!(y0 >= 0.0 && y0 <= 1.0)) throw DomainError("sine map: y0 outside [0, 1]");
  OrbitReport report;
  char given[32];
  std::snprintf(given, sizeof given, "%.17g", y0);
  report.x0_given = given;
  report.x0_represented = exact_value(y0);
  report.backend = "f64";

  // Brent: finds the period within 3 * (transient + period) applications, so
  // this cap never hides a cycle that fits the budget.
  const std::size_t cap = 3 * max_steps + 1;
  std::size_t power = 1;
  std::size_t period = 1;
  std::size_t applied = 1;
  double tortoise = y0;
  double hare = sine_map_step(y0);
  while (tortoise != hare) {
    if (applied >= cap) {
      report.steps_taken = max_steps;
      return report;
    }
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = sine_map_step(hare);
    ++period;
    ++applied;
  }

  tortoise = y0;
  hare = y0;
  for (std::size_t i = 0; i < period; ++i) hare = sine_map_step(hare);
  std::size_t transient = 0;
  while (tortoise != hare) {
    tortoise = sine_map_step(tortoise);
    hare = sine_map_step(hare);
    ++transient;
  }
  if (transient + period > max_steps) {
    report.steps_taken = max_steps;
    return report;
  }

  report.status = OrbitStatus::kCycleFound;
  report.transient = transient;
  report.period = period;
  report.steps_taken = transient + period;

  double y = y0;
  for (std::size_t t = 0; t < transient + period; ++t) {
    if (!report.first_integer_step && std::floor(y) == y) report.first_integer_step = t;
    if (t >= transient && report.cycle.size() < kMaxListedSineCycle) report.cycle.push_back(exact_value(y));
    y = sine_map_step(y);
  }
  report.cycle_complete = report.cycle.size() == period;
  report.all_cycle_values_even_integers =
      report.cycle_complete && std::all_of(report.cycle.begin(), report.cycle.end(),
                                           [](const ExactRational& v) { return v.is_even_integer(); });
  return report;
}

}  // namespace tentlab
