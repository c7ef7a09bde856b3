// Copyright 2026 The mogkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "mogkit/approx.hpp"
#include "mogkit/equilibria.hpp"
#include "mogkit/experiment.hpp"
#include "mogkit/mocr.hpp"
#include "mogkit/randgames.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit {
namespace {

VectorSet RandomPositiveSet(std::uint64_t seed, std::size_t size, std::size_t d, long hi) {
  Rng rng(seed);
  std::uniform_int_distribution<long> draw(1, hi);
  std::vector<PayoffVector> out;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<Rational> xs;
    for (std::size_t k = 0; k < d; ++k) xs.emplace_back(draw(rng));
    out.emplace_back(std::move(xs));
  }
  return VectorSet(std::move(out));
}

void BM_EffSweep2d(benchmark::State& state) {
  const VectorSet x = RandomPositiveSet(1, state.range(0), 2, 1 << 20);
  for (auto _ : state) benchmark::DoNotOptimize(eff_sweep_2d(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EffSweep2d)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_EffPairwise2d(benchmark::State& state) {
  const VectorSet x = RandomPositiveSet(1, state.range(0), 2, 1 << 20);
  for (auto _ : state) benchmark::DoNotOptimize(eff_pairwise(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EffPairwise2d)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_EffFront3d(benchmark::State& state) {
  const VectorSet x = RandomPositiveSet(2, state.range(0), 3, 1 << 20);
  for (auto _ : state) benchmark::DoNotOptimize(eff(x));
}
BENCHMARK(BM_EffFront3d)->RangeMultiplier(4)->Range(64, 4096);

// Antichains on the line x + y = c, so every member survives EFF and WST.
VectorSet Antichain(std::size_t size, long offset) {
  std::vector<PayoffVector> out;
  for (std::size_t i = 0; i < size; ++i) {
    const long x = offset + static_cast<long>(i);
    out.push_back(PayoffVector{Rational(x), Rational(offset + static_cast<long>(size) - x)});
  }
  return VectorSet(std::move(out));
}

void BM_MocrLayered(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const VectorSet worst = Antichain(n, 3);
  const VectorSet frontier = Antichain(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(mocr(worst, frontier));
}
BENCHMARK(BM_MocrLayered)->DenseRange(4, 32, 4)->Unit(benchmark::kMillisecond);

void BM_MocrPathOracle(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const VectorSet worst = Antichain(n, 3);
  const VectorSet frontier = Antichain(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(mocr_oracle(worst, frontier));
}
BENCHMARK(BM_MocrPathOracle)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SolveNormal(benchmark::State& state) {
  const Game g = gen_uniform_normal(state.range(0), 2, 2, 1, 16, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pareto_nash(g));
}
BENCHMARK(BM_SolveNormal)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void BM_SolveSymmetric(benchmark::State& state) {
  const Game g = gen_uniform_symmetric(state.range(0), 3, 2, 1, 16, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pareto_nash(g));
}
BENCHMARK(BM_SolveSymmetric)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMillisecond);

void BM_SolveGridGraphical(benchmark::State& state) {
  const Game g = gen_uniform_grid_graphical(state.range(0), state.range(1), 2, 2, 1, 16, 6);
  for (auto _ : state) benchmark::DoNotOptimize(pareto_nash(g));
}
BENCHMARK(BM_SolveGridGraphical)
    ->ArgsProduct({{4, 6, 8}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_ApproxPipeline(benchmark::State& state) {
  const Game g = gen_uniform_grid_graphical(state.range(0), 1, 2, 2, 1, 16, 7);
  const CoveringPrecision precision{Rational(13, 200), Rational(7, 200)};
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, precision));
}
BENCHMARK(BM_ApproxPipeline)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mogkit

BENCHMARK_MAIN();
