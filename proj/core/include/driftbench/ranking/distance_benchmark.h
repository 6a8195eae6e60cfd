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
#include <span>
#include <string>
#include <vector>

#include "driftbench/generator/stream.h"
#include "driftbench/ranking/series.h"
#include "driftbench/samplers/sampler.h"

namespace driftbench {

struct NamedSampler {
  std::string name;
  SamplerFactory factory;
};

struct DistanceBenchmarkOptions {
  std::uint64_t batch_size = 30000;
  std::size_t top_k = 300;
};

struct DistanceBenchmarkResult {
  // Metrics "hellinger" and "counters" per batch and algorithm.
  BenchmarkSeries series;
  // Metric "record_ns": wall time spent in Record during the batch.
  BenchmarkSeries timings;
  // Algorithms by ascending mean Hellinger, ties by name.
  std::vector<std::string> ranking;
};

// Feeds every sampler the identical stream. At the end of each micro-batch
// each sampler's top-K answer, normalised, is compared with the oracle's
// top-K distribution at the current index. An empty answer scores 1.
// Throws ValidationError when the stream metadata has no drifts, when
// batch_size or top_k is zero, or when no samplers are given.
DistanceBenchmarkResult RunDistanceBenchmark(const StreamBuffer& stream,
                                             std::span<const NamedSampler> samplers,
                                             const DistanceBenchmarkOptions& options);

}  // namespace driftbench
