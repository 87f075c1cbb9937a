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

#include <benchmark/benchmark.h>

#include <vector>

#include "tentlab/harness/histogram.hpp"
#include "tentlab/preimage/backward_walk.hpp"
#include "tentlab/preimage/basin_forest.hpp"

namespace {

using namespace tentlab;

void BM_BackwardWalk(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const ExactRational start(336, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(backward_random_walk(start, steps, 12345, TentParams::with_bound(100), kDefaultPrecisionCap));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BackwardWalk)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ConsistencyCheck(benchmark::State& state) {
  const auto walk = backward_random_walk(ExactRational(336, 5), 40, 12345, TentParams::with_bound(100), kDefaultPrecisionCap);
  for (auto _ : state) benchmark::DoNotOptimize(forward_consistency_check(walk, PrecisionSpec::for_domain(100, 20)));
}
BENCHMARK(BM_ConsistencyCheck);

void BM_BasinForest(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(integer_basin_forest({0}, bound));
}
BENCHMARK(BM_BasinForest)->Arg(100)->Arg(1 << 16);

void BM_Histogram(benchmark::State& state) {
  std::vector<double> v;
  for (int i = 0; i < 60000; ++i) v.push_back((i * 37 % 1000) / 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_histogram(v, 100.0, 20));
}
BENCHMARK(BM_Histogram);

}  // namespace
