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

#include "tentlab/dynamics/backend.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "tentlab/binary/float_rounding.hpp"
#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("malformed backend '" + std::string(whole) + "'");
  }
  return v;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void TentParams::validate() const {
  if (a.is_zero()) throw ConfigError("tent map slope a must be positive");
  if (N.is_zero()) throw ConfigError("tent map bound N must be positive");
}

Backend Backend::fixed(PrecisionSpec spec) {
  spec.validate();
  return Backend(Kind::kFixed, spec);
}

Backend Backend::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text == "f64") return binary64();
  if (text == "f32") return binary32();
  constexpr std::string_view kFixed = "fixed:";
  if (text.substr(0, kFixed.size()) == kFixed) {
    const std::string_view rest = text.substr(kFixed.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ParseError("malformed backend '" + std::string(text) + "'");
    return fixed(PrecisionSpec{parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text)});
  }
  throw ParseError("unknown backend '" + std::string(text) + "' (expected rational, fixed:p,q, f64, f32)");
}

std::string Backend::id() const {
  switch (kind_) {
    case Kind::kRational:
      return "rational";
    case Kind::kFixed:
      return "fixed:" + std::to_string(precision_.p) + "," + std::to_string(precision_.q);
    case Kind::kBinary64:
      return "f64";
    case Kind::kBinary32:
      return "f32";
  }
  return "?";
}

ExactRational exact_value(const State& s) {
  return std::visit(Overloaded{
                        [](const ExactRational& v) { return v; },
                        [](const FixedBinary& v) { return to_rational(v); },
                        [](double v) { return exact_value(v); },
                        [](float v) { return exact_value(v); },
                    },
                    s);
}

std::string to_display_string(const State& s) {
  if (const auto* fb = std::get_if<FixedBinary>(&s)) return to_decimal_string(*fb);
  return to_display_string(exact_value(s));
}

bool is_integer(const State& s) {
  return std::visit(Overloaded{
                        [](const ExactRational& v) { return v.is_integer(); },
                        [](const FixedBinary& v) { return classify_integer(v) != IntegerClass::kNotInteger; },
                        [](double v) { return std::floor(v) == v; },
                        [](float v) { return std::floor(v) == v; },
                    },
                    s);
}

}  // namespace tentlab
