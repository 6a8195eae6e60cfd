// Copyright 2026 The driftbench Authors
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

#include "driftbench/generator/zipf.h"
#include "driftbench/metrics/distance.h"

namespace driftbench {
namespace {

void BM_Hellinger(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto p = ZipfianDist(n, 1.0, 1);
  const auto q = ZipfianDist(n, 1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Hellinger(p, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Hellinger)->Arg(300)->Arg(100000);

void BM_KlDivergence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto p = ZipfianDist(n, 1.0, 1);
  const auto q = ZipfianDist(n / 2, 1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(KlDivergenceSmoothed(p, q));
}
BENCHMARK(BM_KlDivergence)->Arg(300)->Arg(100000);

}  // namespace
}  // namespace driftbench

BENCHMARK_MAIN();
