// Copyright 2026 The Paintlab Authors
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

#include <benchmark/benchmark.h>

#include <numeric>

#include "paintlab/families.hpp"
#include "paintlab/game.hpp"
#include "paintlab/graph.hpp"
#include "paintlab/indset.hpp"
#include "paintlab/solver.hpp"
#include "paintlab/strategies.hpp"

namespace paintlab {
namespace {

void BM_GnpDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gnp(n, 0.5, ++seed));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GnpDense)->RangeMultiplier(2)->Range(1 << 10, 1 << 13)->Unit(benchmark::kMillisecond);

void BM_GnpSparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gnp(n, 10.0 / static_cast<double>(n), ++seed));
}
BENCHMARK(BM_GnpSparse)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_GreedyIndependentSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gnp(n, 0.5, 1);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(greedy_independent_set(g, all, ++seed));
}
BENCHMARK(BM_GreedyIndependentSet)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14);

void BM_Paintability(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gnp(n, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(paintability(g));
}
BENCHMARK(BM_Paintability)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_DenseGame(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gnp(n, 0.5, 4);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto corrector = dense_corrector(g, {.p = 0.5}, ++seed);
    auto painter = full_set_painter();
    benchmark::DoNotOptimize(play(g, static_cast<int>(n), *painter, *corrector));
  }
}
BENCHMARK(BM_DenseGame)->Arg(1 << 10)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace paintlab

BENCHMARK_MAIN();
