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

#include "tentlab/dynamics/tent_map.hpp"
#include "tentlab/errors.hpp"

namespace tentlab {

ExactRational nth_iterate_closed_form(const ExactRational& x, unsigned n, const TentParams& params) {
  params.validate();
  if (!params.slope_is_two()) throw ConfigError("closed-form iterate requires a = 2");
  if (n == 0) throw DomainError("closed-form iterate requires n >= 1");
  const ExactRational& bound = params.N;
  if (x > bound) throw DomainError("closed-form iterate: x outside [0, N]");

  // Piece index i = floor(2^n x / N), with x = N folded into the last piece.
  const ExactRational scaled = x.times_pow2(n);
  mpz_class piece = (scaled / bound).floor();
  mpz_class last;
  mpz_setbit(last.get_mpz_t(), n);
  last -= 1;
  if (piece > last) piece = last;

  const ExactRational i(piece, 1);
  if (mpz_even_p(piece.get_mpz_t()) != 0) return scaled - i * bound;
  return (i + ExactRational(1)) * bound - scaled;
}

}  // namespace tentlab
