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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "driftbench/generator/stream.h"
#include "driftbench/ranking/partitioning.h"
#include "driftbench/ranking/series.h"
#include "driftbench/samplers/sampler.h"

namespace driftbench {

struct ImbalanceBenchmarkOptions {
  std::size_t partitions = 5;
  std::uint64_t batch_size = 30000;
  std::size_t top_k = 300;
  std::shared_ptr<const Decider> decider = std::make_shared<ImbalanceThresholdDecider>();
  std::shared_ptr<const Repartitioner> repartitioner = std::make_shared<GreedyLpt>();
};

struct ImbalanceBenchmarkResult {
  // Metrics "imbalance" (percent) and "repartitioned" (0 or 1) per batch.
  BenchmarkSeries series;
  // Elements routed to each partition during each batch.
  std::vector<std::vector<std::uint64_t>> loads;
};

// Two-stage shuffle simulation. The first stage hashes each element to one
// of m sampler instances; the second stage routes it by the current
// partitioning, and the batch loads count those routed elements. At each
// batch end the imbalance of the loads is recorded, the samplers' top-K
// answers are summed per key, and if the decider fires the repartitioner's
// result is used from the next batch on.
// Throws ValidationError when partitions, batch_size or top_k is zero.
ImbalanceBenchmarkResult RunImbalanceBenchmark(const StreamBuffer& stream,
                                               const std::string& algorithm,
                                               const SamplerFactory& factory,
                                               const ImbalanceBenchmarkOptions& options);

}  // namespace driftbench
