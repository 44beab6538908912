// Copyright 2026 The medsel Authors
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
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "medsel/analysis.h"
#include "medsel/model.h"
#include "medsel/solvers.h"
#include "medsel/value.h"

namespace medsel {
namespace {

GameSetting ThreeMedia(std::int64_t seeds) {
  return GameSetting(seeds, {{100, MakeRational(2)}, {25, MakeRational(1)},
                             {20, MakeRational(1)}});
}

GameSetting TenMedia(std::int64_t seeds) {
  std::vector<MediumParams> media;
  for (std::int64_t j = 0; j < 10; ++j) {
    media.push_back({10 + 7 * j, MakeRational(j % 4, 2)});
  }
  return GameSetting(seeds, std::move(media));
}

void BM_OrderLearningExact(benchmark::State& state) {
  const GameSetting g = ThreeMedia(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(OrderLearningLoad(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrderLearningExact)->RangeMultiplier(10)->Range(100, 10'000)->Complexity();

void BM_OrderLearningFloat(benchmark::State& state) {
  const GameSetting g = TenMedia(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(OrderLearningLoad(g, Backend::kFloat));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrderLearningFloat)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Complexity();

void BM_SdMax(benchmark::State& state) {
  const GameSetting g = TenMedia(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SdMax(g));
}
BENCHMARK(BM_SdMax)->RangeMultiplier(10)->Range(10, 1'000);

void BM_ScalingDescent(benchmark::State& state) {
  const GameSetting g = TenMedia(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ScalingDescent(g));
}
BENCHMARK(BM_ScalingDescent)->RangeMultiplier(10)->Range(10, 10'000);

void BM_BruteForce(benchmark::State& state) {
  const GameSetting g(state.range(0), {{100, MakeRational(2)}, {25, MakeRational(1)},
                                       {20, MakeRational(1)}, {40, MakeRational(3, 2)}});
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceEquilibria(g));
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(30)->Arg(60);

void BM_EnumerateEquilibria(benchmark::State& state) {
  const GameSetting g = TightInstance(state.range(0), 5, MakeRational(1));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateEquilibria(g));
}
BENCHMARK(BM_EnumerateEquilibria)->DenseRange(4, 16, 4);

void BM_PriceOfAnarchy(benchmark::State& state) {
  const GameSetting g = ThreeMedia(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PriceOfAnarchy(g));
}
BENCHMARK(BM_PriceOfAnarchy)->Arg(1'000)->Arg(10'000);

}  // namespace
}  // namespace medsel

BENCHMARK_MAIN();
