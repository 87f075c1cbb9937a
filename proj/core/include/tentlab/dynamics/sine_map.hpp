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

#include "tentlab/dynamics/orbit.hpp"

namespace tentlab {

// y -> sin(pi y) on [0, 1] in binary64. Throws DomainError outside [0, 1].
double sine_map_step(double y);

// At most this many cycle values are listed in a sine-map report.
inline constexpr std::size_t kMaxListedSineCycle = 4096;

// Cycle search for the sine map; same report layout as the tent map and the
// same budget meaning (a cycle is reported only if transient + period <=
// max_steps). Binary64 sine orbits run for tens of millions of steps before
// repeating, so this uses Brent's algorithm in constant memory instead of a
// visited-state index.
OrbitReport detect_sine_cycle(double y0, std::size_t max_steps);

}  // namespace tentlab
