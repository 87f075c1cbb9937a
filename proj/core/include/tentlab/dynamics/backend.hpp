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

#include <string>
#include <string_view>
#include <variant>

#include "tentlab/binary/exact_rational.hpp"
#include "tentlab/binary/fixed_binary.hpp"

namespace tentlab {

// Parameters of the tent map  x -> a x (x < N/2),  a (N - x) otherwise.
struct TentParams {
  ExactRational a{2};
  ExactRational N{1};

  // Throws ConfigError unless a > 0 and N > 0.
  void validate() const;
  bool slope_is_two() const { return a == ExactRational(2); }

  static TentParams with_bound(ExactRational N) { return TentParams{ExactRational(2), std::move(N)}; }
};

// Arithmetic in which a trajectory is computed.
class Backend {
 public:
  enum class Kind { kRational, kFixed, kBinary64, kBinary32 };

  static Backend rational() { return Backend(Kind::kRational, {}); }
  static Backend fixed(PrecisionSpec spec);
  static Backend binary64() { return Backend(Kind::kBinary64, {}); }
  static Backend binary32() { return Backend(Kind::kBinary32, {}); }

  // Accepts "rational", "fixed:p,q", "f64", "f32" (as produced by id()).
  static Backend parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite_state() const { return kind_ != Kind::kRational; }
  // Only meaningful for kFixed.
  const PrecisionSpec& precision() const { return precision_; }

  std::string id() const;

  friend bool operator==(const Backend&, const Backend&) = default;

 private:
  Backend(Kind kind, PrecisionSpec precision) : kind_(kind), precision_(precision) {}

  Kind kind_;
  PrecisionSpec precision_;
};

// A value as held by one of the backends.
using State = std::variant<ExactRational, FixedBinary, double, float>;

// Every backend value is a rational number; this returns it exactly.
ExactRational exact_value(const State& s);

// Terminating decimal where one exists (always for the binary backends).
std::string to_display_string(const State& s);

bool is_integer(const State& s);

}  // namespace tentlab
