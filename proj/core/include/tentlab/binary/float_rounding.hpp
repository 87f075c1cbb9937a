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

#include "tentlab/binary/exact_rational.hpp"

namespace tentlab {

// Correctly rounded (round-to-nearest, ties-to-even) conversion of an exact
// rational into binary64 / binary32. The host's mpq_get_d truncates, so it is
// not used here. Throws OverflowError past the largest finite value.
double to_binary64(const ExactRational& x);
float to_binary32(const ExactRational& x);

// Exact value of a finite, non-negative floating-point number.
ExactRational exact_value(double x);
ExactRational exact_value(float x);

}  // namespace tentlab
