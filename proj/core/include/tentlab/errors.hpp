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

#include <stdexcept>
#include <string>

namespace tentlab {

// Malformed textual input (decimal numerals, backend ids, cycle lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value outside the domain an operation is defined on: negative numbers,
// points outside [0, N], cycles that are not invariant under the map.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A fixed-point result that does not fit in p integer bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Parameter combinations a backend cannot honour (e.g. slope != 2 in
// fixed point, or p too small to hold N).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tentlab
