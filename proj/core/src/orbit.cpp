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

#include "tentlab/dynamics/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "tentlab/binary/float_rounding.hpp"
#include "tentlab/errors.hpp"

namespace tentlab {
namespace {

struct FixedBinaryHash {
  std::size_t operator()(const FixedBinary& x) const { return hash_value(x.magnitude()); }
};

bool value_is_integer(const ExactRational& v) { return v.is_integer(); }
bool value_is_integer(const FixedBinary& v) { return classify_integer(v) != IntegerClass::kNotInteger; }
bool value_is_integer(double v) { return std::floor(v) == v; }
bool value_is_integer(float v) { return std::floor(v) == v; }

ExactRational as_rational(const ExactRational& v) { return v; }
ExactRational as_rational(const FixedBinary& v) { return to_rational(v); }
ExactRational as_rational(double v) { return exact_value(v); }
ExactRational as_rational(float v) { return exact_value(v); }

template <class T>
void fill_report(const detail::CycleSearch<T>& search, OrbitReport& report) {
  const auto& traj = search.trajectory;
  report.steps_taken = traj.size() - 1;
  report.x0_represented = as_rational(traj.front());

  const auto first_int = std::find_if(traj.begin(), traj.end(), [](const T& v) { return value_is_integer(v); });
  if (first_int != traj.end()) report.first_integer_step = static_cast<std::size_t>(first_int - traj.begin());

  if (!search.found) {
    report.status = OrbitStatus::kBudgetExhausted;
    return;
  }
  report.status = OrbitStatus::kCycleFound;
  report.transient = search.transient;
  report.period = search.period;
  report.cycle.reserve(search.period);
  for (std::size_t i = 0; i < search.period; ++i) report.cycle.push_back(as_rational(traj[search.transient + i]));
  report.all_cycle_values_even_integers = std::all_of(
      report.cycle.begin(), report.cycle.end(), [](const ExactRational& v) { return v.is_even_integer(); });
}

template <class T, class Hash = std::hash<T>>
OrbitReport run(const TentMap& map, const State& x0, std::size_t max_steps) {
  OrbitReport report;
  report.backend = map.backend().id();
  report.x0_given = to_display_string(x0);
  const auto search = detail::find_cycle<T>(
      std::get<T>(x0), [&map](const T& v) { return map.step(v); }, max_steps, Hash{});
  fill_report(search, report);
  return report;
}

}  // namespace

OrbitReport detect_cycle(const TentMap& map, const State& x0, std::size_t max_steps) {
  if (x0.index() != static_cast<std::size_t>(map.backend().kind())) {
    throw DomainError("detect_cycle: initial state does not belong to backend " + map.backend().id());
  }
  switch (map.backend().kind()) {
    case Backend::Kind::kRational:
      return run<ExactRational>(map, x0, max_steps);
    case Backend::Kind::kFixed:
      return run<FixedBinary, FixedBinaryHash>(map, x0, max_steps);
    case Backend::Kind::kBinary64:
      return run<double>(map, x0, max_steps);
    case Backend::Kind::kBinary32:
      return run<float>(map, x0, max_steps);
  }
  throw ConfigError("unknown backend");
}

OrbitReport detect_cycle(std::string_view x0_decimal, const TentParams& params, const Backend& backend,
                         std::size_t max_steps) {
  const TentMap map(params, backend);
  OrbitReport report = detect_cycle(map, map.represent(parse_decimal(x0_decimal)), max_steps);
  report.x0_given = std::string(x0_decimal);
  return report;
}

nlohmann::json to_json(const OrbitReport& report) {
  nlohmann::json cycle = nlohmann::json::array();
  for (const auto& v : report.cycle) cycle.push_back(to_display_string(v));
  nlohmann::json j;
  j["x0_given"] = report.x0_given;
  j["x0_represented"] = to_display_string(report.x0_represented);
  j["backend"] = report.backend;
  j["status"] = report.found() ? "cycle" : "budget-exhausted";
  j["transient"] = report.transient;
  j["period"] = report.period;
  j["cycle"] = std::move(cycle);
  j["first_integer_step"] =
      report.first_integer_step ? nlohmann::json(*report.first_integer_step) : nlohmann::json(nullptr);
  j["even_cycle"] = report.all_cycle_values_even_integers;
  j["cycle_complete"] = report.cycle_complete;
  j["steps_taken"] = report.steps_taken;
  return j;
}

}  // namespace tentlab
