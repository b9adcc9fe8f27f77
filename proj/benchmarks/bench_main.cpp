// Copyright 2026 The blockdom Authors
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

#include "blockdom/decay_bounds.hpp"
#include "blockdom/experiments.hpp"
#include "blockdom/gershgorin.hpp"
#include "blockdom/tridiag_inverse.hpp"

namespace blockdom {
namespace {

void BM_TwoNorm(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const DenseBlock t = BuildTridiagToeplitz(m, -1.0, 4.0, -0.5);
  for (auto _ : state) benchmark::DoNotOptimize(Norm(t, NormKind::kTwo));
}
BENCHMARK(BM_TwoNorm)->Arg(2)->Arg(9)->Arg(32);

void BM_IkebeInverse(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto a = KronSum(BuildTridiagToeplitz(k, -1.0, 2.0, -1.0));
  for (auto _ : state) benchmark::DoNotOptimize(InvertBlockTridiagonal(a));
}
BENCHMARK(BM_IkebeInverse)->Arg(5)->Arg(9)->Arg(16);

void BM_BoundsAllSteps(benchmark::State& state) {
  const auto a = BuildTridiagonalExample(ExampleId::kEx21);
  const BlockInverse z = InvertBlockTridiagonal(a);
  for (auto _ : state) {
    const TauOmegaTable table = ComputeTauOmega(a, NormKind::kTwo);
    for (std::size_t t = 1; t <= table.t_max(); ++t)
      benchmark::DoNotOptimize(ComputeBounds(a, z, table, t));
  }
}
BENCHMARK(BM_BoundsAllSteps)->Unit(benchmark::kMillisecond);

void BM_RegionGrid(benchmark::State& state) {
  const auto g = BuildGershgorinExample(ExampleId::kEx31a);
  const auto side = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(EvalGrid(g, std::nullopt, side, side, NormKind::kTwo));
}
BENCHMARK(BM_RegionGrid)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace blockdom

BENCHMARK_MAIN();
