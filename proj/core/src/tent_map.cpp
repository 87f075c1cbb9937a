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

#include <string>

#include "tentlab/binary/float_rounding.hpp"
#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

[[noreturn]] void out_of_domain(const std::string& x, const std::string& n) {
  throw DomainError("tent map: " + x + " is outside [0, " + n + "]");
}

State make_bound(const TentParams& params, const Backend& backend) {
  params.validate();
  switch (backend.kind()) {
    case Backend::Kind::kRational:
      return params.N;
    case Backend::Kind::kFixed: {
      const PrecisionSpec& spec = backend.precision();
      if (!params.slope_is_two()) {
        throw ConfigError("fixed-point backend requires slope a = 2 (got " + to_display_string(params.a) + ")");
      }
      if (bits_to_hold(params.N) > static_cast<std::size_t>(spec.p)) {
        throw ConfigError("fixed-point backend " + backend.id() + " cannot hold N = " + to_display_string(params.N) +
                          "; need p >= " + std::to_string(bits_to_hold(params.N)));
      }
      return round_off(params.N, spec);
    }
    case Backend::Kind::kBinary64:
      return to_binary64(params.N);
    case Backend::Kind::kBinary32:
      return to_binary32(params.N);
  }
  throw ConfigError("unknown backend");
}

}  // namespace

TentMap::TentMap(TentParams params, Backend backend)
    : params_(std::move(params)), backend_(backend), bound_(make_bound(params_, backend_)) {
  if (backend_.kind() == Backend::Kind::kBinary64) {
    a64_ = to_binary64(params_.a);
    n64_ = std::get<double>(bound_);
  } else if (backend_.kind() == Backend::Kind::kBinary32) {
    a32_ = to_binary32(params_.a);
    n32_ = std::get<float>(bound_);
  }
}

State TentMap::represent(const ExactRational& x) const {
  switch (backend_.kind()) {
    case Backend::Kind::kRational:
      return x;
    case Backend::Kind::kFixed:
      return round_off(x, backend_.precision());
    case Backend::Kind::kBinary64:
      return to_binary64(x);
    case Backend::Kind::kBinary32:
      return to_binary32(x);
  }
  throw ConfigError("unknown backend");
}

State TentMap::step(const State& x) const {
  const auto expected = static_cast<std::size_t>(backend_.kind());
  if (x.index() != expected) throw DomainError("tent map: state does not belong to backend " + backend_.id());
  return std::visit([this](const auto& v) -> State { return step(v); }, x);
}

ExactRational TentMap::step(const ExactRational& x) const {
  const ExactRational& n = params_.N;
  if (x > n) out_of_domain(to_display_string(x), to_display_string(n));
  if (x.times_pow2(1) < n) return params_.a * x;
  return params_.a * (n - x);
}

FixedBinary TentMap::step(const FixedBinary& x) const {
  const auto& n = std::get<FixedBinary>(bound_);
  if (x.spec() != n.spec()) throw DomainError("tent map: operand layout differs from backend " + backend_.id());
  if (x > n) out_of_domain(to_decimal_string(x), to_decimal_string(n));
  // 2x < N, compared on magnitudes so that 2x never has to fit in p bits.
  mpz_class twice = x.magnitude();
  mpz_mul_2exp(twice.get_mpz_t(), twice.get_mpz_t(), 1);
  if (twice < n.magnitude()) return double_value(x);
  return double_value(subtract_from(n, x));
}

double TentMap::step(double x) const {
  if (!(x >= 0.0 && x <= n64_)) out_of_domain(std::to_string(x), std::to_string(n64_));
  if (2.0 * x < n64_) return a64_ * x;
  return a64_ * (n64_ - x);
}

float TentMap::step(float x) const {
  if (!(x >= 0.0F && x <= n32_)) out_of_domain(std::to_string(x), std::to_string(n32_));
  if (2.0F * x < n32_) return a32_ * x;
  return a32_ * (n32_ - x);
}

State tent_step(const State& x, const TentParams& params, const Backend& backend) {
  return TentMap(params, backend).step(x);
}

std::vector<State> iterate(const TentMap& map, const State& x0, std::size_t steps) {
  std::vector<State> out;
  out.reserve(steps + 1);
  out.push_back(x0);
  for (std::size_t t = 0; t < steps; ++t) out.push_back(map.step(out.back()));
  return out;
}

std::vector<State> iterate(const ExactRational& x0, const TentParams& params, const Backend& backend,
                           std::size_t steps) {
  const TentMap map(params, backend);
  return iterate(map, map.represent(x0), steps);
}

}  // namespace tentlab
