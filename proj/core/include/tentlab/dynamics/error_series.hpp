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
#include <string>
#include <vector>

#include "tentlab/dynamics/tent_map.hpp"

namespace tentlab {

// Per-step deviation of a computed orbit from the exact orbit of the same
// initial condition, and the running sum E_T of those deviations.
struct ErrorSeries {
  std::vector<ExactRational> deviations;  // |computed_t - true_t|, t = 0..T
  std::vector<ExactRational> running_sum;  // E_t

  ExactRational total() const { return running_sum.back(); }
};

// Both orbits start from x0; the computed one from its backend representation.
ErrorSeries error_accumulation(const ExactRational& x0, const TentParams& params, const Backend& backend,
                               std::size_t horizon);

// "t,E_t" header followed by one row per step, values as exact decimals
// where they terminate.
std::string to_csv(const ErrorSeries& series);

}  // namespace tentlab
