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

#include "tentlab/errors.hpp"

namespace tentlab {

PreimagePair preimages_of(const ExactRational& x, const TentParams& params) {
  params.validate();
  if (!params.slope_is_two()) throw ConfigError("preimages are only defined here for slope a = 2");
  if (x > params.N) throw DomainError("preimages_of: " + to_display_string(x) + " is outside [0, N]");
  ExactRational half = x.div_pow2(1);
  return PreimagePair{half, params.N - half};
}

}  // namespace tentlab
