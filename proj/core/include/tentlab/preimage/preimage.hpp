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

#include "tentlab/dynamics/backend.hpp"

namespace tentlab {

// The two inverse branches of the slope-2 tent map at x: x/2 on the
// ascending branch and N - x/2 on the descending one. They coincide at x = N.
struct PreimagePair {
  ExactRational left;
  ExactRational right;

  bool single() const { return left == right; }
};

// Requires a = 2 and 0 <= x <= N.
PreimagePair preimages_of(const ExactRational& x, const TentParams& params);

}  // namespace tentlab
