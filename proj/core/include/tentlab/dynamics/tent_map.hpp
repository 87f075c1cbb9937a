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
#include <vector>

#include "tentlab/dynamics/backend.hpp"

namespace tentlab {

// The tent map bound to one backend.
//
// Construction resolves everything that depends only on (params, backend):
// the represented bound N, the slope, and the capacity check for fixed point.
// The fixed-point backend accepts a = 2 only and requires N < 2^p; the branch
// test x < N/2 is evaluated as 2x < N throughout so that N/2 never has to be
// represented.
class TentMap {
 public:
  TentMap(TentParams params, Backend backend);

  const TentParams& params() const { return params_; }
  const Backend& backend() const { return backend_; }
  // N as held by the backend (rounded once, at construction).
  const State& bound() const { return bound_; }

  // The backend's representation of x: exact, rho(x), or round-to-nearest.
  State represent(const ExactRational& x) const;

  // One application of the map. Throws DomainError unless 0 <= x <= N (as
  // represented) and the state belongs to this backend.
  State step(const State& x) const;

  ExactRational step(const ExactRational& x) const;
  FixedBinary step(const FixedBinary& x) const;
  double step(double x) const;
  float step(float x) const;

 private:
  TentParams params_;
  Backend backend_;
  State bound_;
  // Cached per-backend constants.
  double a64_ = 2.0;
  double n64_ = 0.0;
  float a32_ = 2.0F;
  float n32_ = 0.0F;
};

State tent_step(const State& x, const TentParams& params, const Backend& backend);

// trajectory[0] is the backend representation of x0, trajectory[t+1] is the
// image of trajectory[t]; steps + 1 values in total.
std::vector<State> iterate(const ExactRational& x0, const TentParams& params, const Backend& backend,
                           std::size_t steps);
std::vector<State> iterate(const TentMap& map, const State& x0, std::size_t steps);

// theta^n(x) in exact arithmetic from the 2^n-piece sawtooth: on the piece
// [iN/2^n, (i+1)N/2^n) the iterate is 2^n x - iN for even i and
// (i+1)N - 2^n x for odd i. Requires a = 2 and n >= 1.
ExactRational nth_iterate_closed_form(const ExactRational& x, unsigned n, const TentParams& params);

}  // namespace tentlab
