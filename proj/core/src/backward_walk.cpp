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

#include "tentlab/preimage/backward_walk.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

// Splits d into odd * 2^twos.
std::pair<mpz_class, std::size_t> split_pow2(const mpz_class& d) {
  const std::size_t twos = mpz_scan1(d.get_mpz_t(), 0);
  mpz_class odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), d.get_mpz_t(), twos);
  return {odd, twos};
}

}  // namespace

BackwardWalk BackwardWalk::prefix(std::size_t n) const {
  if (n > steps()) throw DomainError("BackwardWalk::prefix: walk is shorter than requested");
  BackwardWalk out;
  out.seed = seed;
  out.rng = rng;
  out.params = params;
  out.precision_cap = precision_cap;
  out.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n + 1));
  out.choices.assign(choices.begin(), choices.begin() + static_cast<std::ptrdiff_t>(n));
  if (truncated_from && *truncated_from <= n) out.truncated_from = truncated_from;
  return out;
}

BackwardWalk backward_random_walk(const ExactRational& start, std::size_t steps, std::uint64_t seed,
                                  const TentParams& params, std::size_t precision_cap) {
  params.validate();
  if (!params.slope_is_two()) throw ConfigError("backward walks need slope a = 2");
  if (start > params.N) throw DomainError("backward walk: start outside [0, N]");

  // Every value is held as m / (odd * 2^k) on a lattice that also contains N.
  const auto [start_odd, start_twos] = split_pow2(start.denominator());
  const auto [bound_odd, bound_twos] = split_pow2(params.N.denominator());
  mpz_class odd;
  mpz_lcm(odd.get_mpz_t(), start_odd.get_mpz_t(), bound_odd.get_mpz_t());
  if (bound_twos > precision_cap) throw ConfigError("backward walk: precision cap cannot hold N");

  std::size_t k = std::max(start_twos, bound_twos);
  mpz_class m = start.numerator() * (odd / start_odd);
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), k - start_twos);
  // N * odd * 2^k == bound_base * 2^(k - bound_twos)
  const mpz_class bound_base = params.N.numerator() * (odd / bound_odd);

  BackwardWalk walk;
  walk.seed = seed;
  walk.params = params;
  walk.precision_cap = precision_cap;
  walk.values.reserve(steps + 1);
  walk.choices.reserve(steps);
  walk.values.push_back(start);

  std::mt19937_64 rng(seed);
  mpz_class bound_scaled;
  for (std::size_t i = 1; i <= steps; ++i) {
    const auto choice = static_cast<std::uint8_t>(rng() >> 63);
    // Halving moves to lattice k + 1 without touching m.
    ++k;
    if (choice == 1) {
      mpz_mul_2exp(bound_scaled.get_mpz_t(), bound_base.get_mpz_t(), k - bound_twos);
      m = bound_scaled - m;
    }
    if (k > precision_cap) {
      mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), 1);
      k = precision_cap;
      if (!walk.truncated_from) walk.truncated_from = i;
    }
    mpz_class den = odd;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    walk.values.emplace_back(m, den);
    walk.choices.push_back(choice);
  }
  return walk;
}

std::string to_csv(const BackwardWalk& walk, std::size_t decimal_digits) {
  std::ostringstream os;
  os << "step,value,choice\n";
  for (std::size_t k = 0; k < walk.values.size(); ++k) {
    os << k << ',' << to_decimal_approx(walk.values[k], decimal_digits) << ',';
    if (k > 0) os << static_cast<int>(walk.choices[k - 1]);
    os << '\n';
  }
  return os.str();
}

ConsistencyReport forward_consistency_check(const BackwardWalk& walk, PrecisionSpec spec, std::size_t max_steps) {
  if (walk.steps() < 1) throw DomainError("forward_consistency_check: walk has no steps");
  ConsistencyReport report;
  const std::size_t depth = walk.steps();

  if (!walk.truncated_from) {
    const TentMap exact(walk.params, Backend::rational());
    ExactRational x = walk.deepest();
    report.exact_reproduction = true;
    for (std::size_t t = 1; t <= depth; ++t) {
      x = exact.step(x);
      ++report.exact_steps_checked;
      if (x != walk.values[depth - t]) {
        report.exact_reproduction = false;
        break;
      }
    }
  }

  const TentMap fixed(walk.params, Backend::fixed(spec));
  FixedBinary x = round_off(walk.deepest(), spec);
  const FixedBinary x0 = x;
  for (std::size_t t = 0; t <= depth; ++t) {
    if (t > 0) x = fixed.step(x);
    if (to_rational(x) != walk.values[depth - t]) {
      report.first_divergence_step = t;
      break;
    }
  }
  report.terminal = detect_cycle(fixed, x0, max_steps);
  report.terminal.x0_given = to_decimal_approx(walk.deepest(), 30);
  return report;
}

nlohmann::json to_json(const ConsistencyReport& report) {
  return {
      {"exact_reproduction", report.exact_reproduction},
      {"exact_steps_checked", report.exact_steps_checked},
      {"first_divergence_step", report.first_divergence_step ? nlohmann::json(*report.first_divergence_step)
                                                             : nlohmann::json(nullptr)},
      {"terminal_orbit", to_json(report.terminal)},
  };
}

}  // namespace tentlab
