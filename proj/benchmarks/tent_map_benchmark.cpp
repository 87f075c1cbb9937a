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

#include "tentlab/binary/fixed_binary.hpp"
#include "tentlab/dynamics/orbit.hpp"
#include "tentlab/dynamics/sine_map.hpp"
#include "tentlab/dynamics/tent_map.hpp"

namespace {

using namespace tentlab;

const TentParams kN100 = TentParams::with_bound(100);

void BM_Step(benchmark::State& state, Backend backend) {
  const TentMap map(kN100, backend);
  State s = map.represent(parse_decimal("67.2"));
  for (auto _ : state) {
    s = map.step(s);
    if (is_integer(s)) s = map.represent(parse_decimal("67.2"));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK_CAPTURE(BM_Step, f64, Backend::binary64());
BENCHMARK_CAPTURE(BM_Step, f32, Backend::binary32());
BENCHMARK_CAPTURE(BM_Step, fixed_8_20, Backend::fixed({8, 20}));
BENCHMARK_CAPTURE(BM_Step, rational, Backend::rational());

void BM_NativeStep(benchmark::State& state) {
  const TentMap map(TentParams::with_bound(ExactRational(1000001, 10000)), Backend::binary64());
  double x = 67.2;
  for (auto _ : state) {
    x = map.step(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_NativeStep);

void BM_DetectCycle(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_cycle("67.2", kN100, Backend::fixed(PrecisionSpec::for_domain(100, q)), 1000));
  }
}
BENCHMARK(BM_DetectCycle)->Arg(8)->Arg(24)->Arg(64);

void BM_ClosedForm(benchmark::State& state) {
  const ExactRational x(336, 5);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_iterate_closed_form(x, n, kN100));
}
BENCHMARK(BM_ClosedForm)->Arg(1)->Arg(10)->Arg(30);

void BM_SineStep(benchmark::State& state) {
  double y = 0.4;
  for (auto _ : state) {
    y = sine_map_step(y);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_SineStep);

}  // namespace

BENCHMARK_MAIN();
