// Copyright 2026 The simgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Recognizer timings on planted YES instances as the shape grows.

#include <benchmark/benchmark.h>

#include "simgraph/chordal.hpp"
#include "simgraph/comparability.hpp"
#include "simgraph/generate.hpp"
#include "simgraph/permutation.hpp"

namespace simgraph {
namespace {

// range(0) is |V1| = |V2|; a third of each side is shared.
SharedInstance planted(GraphClass cls, benchmark::State& state, PlantedOptions options = {}) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return planted_yes(cls, n, n, n / 3, 17, options);
}

void BM_Chordal(benchmark::State& state) {
  const SharedInstance inst = planted(GraphClass::kChordal, state);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_simultaneous_chordal(inst));
  state.counters["m"] = static_cast<double>(inst.all_edges().size());
}
BENCHMARK(BM_Chordal)->RangeMultiplier(2)->Range(30, 240)->Unit(benchmark::kMillisecond);

void BM_Comparability(benchmark::State& state) {
  PlantedOptions options;
  options.density = 3.0 / static_cast<double>(state.range(0));
  const SharedInstance inst = planted(GraphClass::kComparability, state, options);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_simultaneous_comparability(inst));
  state.counters["m"] = static_cast<double>(inst.all_edges().size());
}
BENCHMARK(BM_Comparability)->RangeMultiplier(2)->Range(30, 240)->Unit(benchmark::kMillisecond);

void BM_Permutation(benchmark::State& state) {
  const SharedInstance inst = planted(GraphClass::kPermutation, state);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_simultaneous_permutation(inst));
  state.counters["m"] = static_cast<double>(inst.all_edges().size());
}
BENCHMARK(BM_Permutation)->RangeMultiplier(2)->Range(15, 120)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace simgraph

BENCHMARK_MAIN();
