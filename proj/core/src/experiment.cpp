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

#include "tentlab/harness/experiment.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tentlab/binary/float_rounding.hpp"
#include "tentlab/dynamics/error_series.hpp"
#include "tentlab/dynamics/orbit.hpp"
#include "tentlab/dynamics/sine_map.hpp"
#include "tentlab/errors.hpp"
#include "tentlab/harness/histogram.hpp"
#include "tentlab/preimage/basin_forest.hpp"
#include "tentlab/preimage/backward_walk.hpp"

namespace tentlab {
namespace {

constexpr std::size_t kCsvDigits = 30;
// Sub-walk used for the forward consistency check of backward experiments.
constexpr std::size_t kConsistencySteps = 40;
constexpr int kConsistencyFractionBits = 20;

TentParams params_of(const ExperimentConfig& c) { return TentParams{parse_decimal(c.a), parse_decimal(c.N)}; }

std::string csv_decimal(const ExactRational& x) {
  return to_terminating_decimal(x).value_or(to_decimal_approx(x, kCsvDigits));
}

std::string trajectory_csv(const std::vector<State>& traj) {
  std::ostringstream os;
  os << "t,value,bits,integer\n";
  for (std::size_t t = 0; t < traj.size(); ++t) {
    os << t << ',' << csv_decimal(exact_value(traj[t])) << ',';
    if (const auto* fb = std::get_if<FixedBinary>(&traj[t])) os << fb->bit_string();
    os << ',' << (is_integer(traj[t]) ? 1 : 0) << '\n';
  }
  return os.str();
}

std::int64_t integer_bound(const TentParams& params) {
  if (!params.N.is_integer() || !params.slope_is_two()) {
    throw ConfigError("basin forests need a = 2 and an integer N");
  }
  return std::stoll(params.N.numerator().get_str());
}

std::vector<std::int64_t> integer_cycle(const OrbitReport& report) {
  if (!report.found()) throw DomainError("no cycle found within the step budget");
  std::vector<std::int64_t> out;
  for (const auto& v : report.cycle) {
    if (!v.is_integer()) throw DomainError("cycle " + to_display_string(v) + " is not an integer cycle");
    out.push_back(std::stoll(v.numerator().get_str()));
  }
  return out;
}

std::vector<double> as_doubles(const std::vector<State>& traj, std::size_t from) {
  std::vector<double> out;
  out.reserve(traj.size() - from);
  for (std::size_t t = from; t < traj.size(); ++t) {
    const State& s = traj[t];
    if (const auto* d = std::get_if<double>(&s)) {
      out.push_back(*d);
    } else if (const auto* f = std::get_if<float>(&s)) {
      out.push_back(*f);
    } else {
      out.push_back(to_binary64(exact_value(s)));
    }
  }
  return out;
}

nlohmann::json histogram_json(const Histogram& h) {
  return {{"bins", h.bins()},  {"total", h.total},           {"bound", h.bound},
          {"sup_norm", h.sup_norm}, {"chi_square", h.chi_square}, {"counts", h.counts}};
}

// --- subcommands ----------------------------------------------------------

void run_iterate(const ExperimentConfig& c, ReportBundle& out) {
  const TentMap map(params_of(c), Backend::parse(c.backend));
  const auto traj = iterate(map, map.represent(parse_decimal(c.x0)), c.steps);
  out.summary["x0_represented"] = to_display_string(traj.front());
  out.summary["final"] = to_display_string(traj.back());
  out.add("trajectory.csv", trajectory_csv(traj));
}

void run_cycle(const ExperimentConfig& c, ReportBundle& out) {
  const TentMap map(params_of(c), Backend::parse(c.backend));
  const State x0 = map.represent(parse_decimal(c.x0));
  OrbitReport report = detect_cycle(map, x0, c.max_steps);
  report.x0_given = c.x0;
  out.summary["orbit"] = to_json(report);
  out.add_json("orbit.json", to_json(report));
  out.add("trajectory.csv", trajectory_csv(iterate(map, x0, report.steps_taken)));
}

void run_basin(const ExperimentConfig& c, ReportBundle& out) {
  const TentParams params = params_of(c);
  const std::int64_t bound = integer_bound(params);
  std::vector<std::int64_t> cycle;
  if (c.cycle) {
    cycle = *c.cycle;
  } else {
    cycle = integer_cycle(detect_cycle(c.x0, params, Backend::parse(c.backend), c.max_steps));
  }
  const BasinForest forest = integer_basin_forest(cycle, bound);
  out.summary["forest"] = cycle_json(forest);
  out.add("edges.csv", edges_csv(forest));
  out.add_json("cycle.json", cycle_json(forest));
  out.add("tree.txt", render_tree(forest));
}

PrecisionSpec consistency_spec(const ExperimentConfig& c, const TentParams& params) {
  const Backend b = Backend::parse(c.backend);
  if (b.kind() == Backend::Kind::kFixed) return b.precision();
  return PrecisionSpec::for_domain(params.N, kConsistencyFractionBits);
}

void run_backward(const ExperimentConfig& c, ReportBundle& out) {
  const TentParams params = params_of(c);
  const BackwardWalk walk = backward_random_walk(parse_decimal(c.x0), c.steps, c.seed, params, c.precision_cap);
  if (walk.truncated_from) {
    out.notes.push_back("warning: walk values truncated to the " + std::to_string(c.precision_cap) +
                        "-bit precision cap from step " + std::to_string(*walk.truncated_from));
  }

  std::vector<double> values;
  values.reserve(walk.steps());
  for (std::size_t k = 1; k < walk.values.size(); ++k) values.push_back(to_binary64(walk.values[k]));
  const Histogram h = build_histogram(values, to_binary64(params.N), c.bins);

  const PrecisionSpec spec = consistency_spec(c, params);
  const ConsistencyReport check =
      forward_consistency_check(walk.prefix(std::min(kConsistencySteps, walk.steps())), spec, c.max_steps);

  out.summary["rng"] = walk.rng;
  out.summary["seed"] = walk.seed;
  out.summary["precision_cap"] = walk.precision_cap;
  out.summary["truncated_from"] = walk.truncated_from ? nlohmann::json(*walk.truncated_from) : nlohmann::json(nullptr);
  out.summary["deepest_is_integer"] = walk.deepest().is_integer();
  out.summary["histogram"] = histogram_json(h);
  out.summary["consistency"] = to_json(check);
  out.summary["consistency_backend"] = Backend::fixed(spec).id();
  out.add("walk.csv", to_csv(walk));
  out.add("histogram.csv", to_csv(h));
  out.add_json("consistency.json", to_json(check));
}

void run_histogram(const ExperimentConfig& c, ReportBundle& out) {
  const TentMap map(params_of(c), Backend::parse(c.backend));
  const State x0 = map.represent(parse_decimal(c.x0));
  const auto traj = iterate(map, x0, c.steps);
  const Histogram h = build_histogram(as_doubles(traj, 1), to_binary64(exact_value(map.bound())), c.bins);

  // Same budget as the histogram run: "no revisit" is a reported outcome.
  OrbitReport report = detect_cycle(map, x0, c.steps);
  report.x0_given = c.x0;
  out.summary["N_represented"] = to_display_string(map.bound());
  out.summary["histogram"] = histogram_json(h);
  out.summary["orbit"] = to_json(report);
  out.add("histogram.csv", to_csv(h));
  out.add("trajectory.csv", trajectory_csv(traj));
  out.add_json("orbit.json", to_json(report));
}

void run_errsum(const ExperimentConfig& c, ReportBundle& out) {
  const ErrorSeries series = error_accumulation(parse_decimal(c.x0), params_of(c), Backend::parse(c.backend), c.steps);
  out.summary["E_T"] = to_display_string(series.total());
  out.add("errsum.csv", to_csv(series));
}

// --- repro experiments ----------------------------------------------------

void run_five_bit_table(const ExperimentConfig& c, ReportBundle& out) {
  run_iterate(c, out);
  const TentMap map(params_of(c), Backend::parse(c.backend));
  const auto traj = iterate(map, map.represent(parse_decimal(c.x0)), c.steps);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : traj) {
    const auto* fb = std::get_if<FixedBinary>(&s);
    rows.push_back({{"bits", fb != nullptr ? fb->bit_string() : ""}, {"decimal", to_display_string(s)}});
  }
  out.summary["table"] = std::move(rows);
  out.notes.push_back(
      "erratum: the printed worked-example table lists 0.0100 (0.25) after 0.1100 although its own operation "
      "column applies 10.0 x (1.0 - 0.1100) = 0.1000 (0.5); this trajectory follows the arithmetic and reaches "
      "0 one step earlier");
}

const std::vector<std::string> kN100Starts = {"67.2", "4.23828125", "12.5"};

void run_n100_orbits(const ExperimentConfig& c, ReportBundle& out) {
  const TentMap map(params_of(c), Backend::parse(c.backend));
  nlohmann::json orbits = nlohmann::json::array();
  for (std::size_t i = 0; i < kN100Starts.size(); ++i) {
    const State x0 = map.represent(parse_decimal(kN100Starts[i]));
    OrbitReport report = detect_cycle(map, x0, c.max_steps);
    report.x0_given = kN100Starts[i];
    orbits.push_back(to_json(report));
    out.add_json("orbit_" + std::to_string(i) + ".json", to_json(report));
    out.add("trajectory_" + std::to_string(i) + ".csv", trajectory_csv(iterate(map, x0, report.steps_taken)));
  }
  out.summary["orbits"] = std::move(orbits);
  out.notes.push_back("the transient for 67.2 depends on how many fractional bits its stored value keeps");
}

void run_n100_basins(const ExperimentConfig& c, ReportBundle& out) {
  const TentParams params = params_of(c);
  const std::int64_t bound = integer_bound(params);
  const Backend backend = Backend::parse(c.backend);
  std::set<std::int64_t> covered;
  std::size_t total = 0;
  bool disjoint = true;
  std::string trees;
  nlohmann::json forests = nlohmann::json::array();
  for (std::size_t i = 0; i < kN100Starts.size(); ++i) {
    const auto cycle = integer_cycle(detect_cycle(kN100Starts[i], params, backend, c.max_steps));
    const BasinForest forest = integer_basin_forest(cycle, bound);
    for (const auto& [v, node] : forest.nodes) disjoint = covered.insert(v).second && disjoint;
    total += forest.nodes.size();
    forests.push_back(cycle_json(forest));
    out.add("edges_" + std::to_string(i) + ".csv", edges_csv(forest));
    out.add_json("cycle_" + std::to_string(i) + ".json", cycle_json(forest));
    trees += render_tree(forest) + "\n";
  }
  out.add("trees.txt", trees);
  out.summary["forests"] = std::move(forests);
  out.summary["total_nodes"] = total;
  out.summary["pairwise_disjoint"] = disjoint;
  out.summary["covers_all_integers"] = covered.size() == static_cast<std::size_t>(bound + 1);
}

void run_sine_map(const ExperimentConfig& c, ReportBundle& out) {
  const double y0 = to_binary64(parse_decimal(c.x0));
  const OrbitReport report = detect_sine_cycle(y0, c.max_steps);
  out.summary["orbit"] = to_json(report);
  out.add_json("orbit.json", to_json(report));
}

using Runner = void (*)(const ExperimentConfig&, ReportBundle&);

struct Entry {
  const char* id;
  Runner run;
};

constexpr Entry kCommands[] = {
    {"iterate", run_iterate},     {"cycle", run_cycle},         {"basin", run_basin},
    {"backward", run_backward},   {"histogram", run_histogram}, {"errsum", run_errsum},
};

constexpr Entry kRepro[] = {
    {"five-bit-table", run_five_bit_table},
    {"n100-orbits", run_n100_orbits},
    {"n100-basins", run_n100_basins},
    {"preimage-histogram", run_backward},
    {"noninteger-N", run_histogram},
    {"error-sum", run_errsum},
    {"sine-map", run_sine_map},
};

template <std::size_t K>
std::vector<std::string> ids_of(const Entry (&entries)[K]) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.emplace_back(e.id);
  return out;
}

}  // namespace

const std::vector<std::string>& experiment_commands() {
  static const std::vector<std::string> ids = ids_of(kCommands);
  return ids;
}

const std::vector<std::string>& repro_ids() {
  static const std::vector<std::string> ids = ids_of(kRepro);
  return ids;
}

ExperimentConfig repro_config(const std::string& id) {
  ExperimentConfig c;
  c.experiment = id;
  if (id == "five-bit-table") {
    c.N = "1";
    c.x0 = "0.4";
    c.backend = "fixed:1,4";
    c.steps = 6;
  } else if (id == "n100-orbits" || id == "n100-basins") {
    c.N = "100";
    c.backend = "f32";
  } else if (id == "preimage-histogram") {
    c.N = "100";
    c.x0 = "67.2";
    c.steps = 60'000;
    c.bins = 20;
    c.backend = "fixed:8,20";
  } else if (id == "noninteger-N") {
    c.N = "100.0001";
    c.x0 = "67.2";
    c.backend = "f64";
    c.steps = 60'000;
    c.bins = 20;
  } else if (id == "error-sum") {
    c.N = "1";
    c.x0 = "0.4";
    c.backend = "fixed:1,4";
    c.steps = 1000;
  } else if (id == "sine-map") {
    c.N = "1";
    c.x0 = "0.4";
    c.backend = "f64";
  } else {
    throw ConfigError("unknown experiment '" + id + "'");
  }
  return c;
}

ReportBundle run_experiment(const ExperimentConfig& config) {
  ReportBundle out;
  out.config = to_json(config);
  out.summary = nlohmann::json::object();
  const auto find = [&config](const auto& entries) -> Runner {
    for (const auto& e : entries) {
      if (config.experiment == e.id) return e.run;
    }
    return nullptr;
  };
  Runner run = find(kCommands);
  if (run == nullptr) run = find(kRepro);
  if (run == nullptr) throw ConfigError("unknown experiment '" + config.experiment + "'");
  if (config.bins < 2) throw ConfigError("bins must be at least 2");
  if (config.steps < 1) throw ConfigError("steps must be at least 1");
  run(config, out);
  return out;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j = {
      {"experiment", c.experiment}, {"a", c.a},         {"N", c.N},
      {"x0", c.x0},                 {"backend", c.backend}, {"steps", c.steps},
      {"bins", c.bins},             {"seed", c.seed},   {"max_steps", c.max_steps},
      {"precision_cap", c.precision_cap},
  };
  if (c.cycle) j["cycle"] = *c.cycle;
  return j;
}

}  // namespace tentlab
