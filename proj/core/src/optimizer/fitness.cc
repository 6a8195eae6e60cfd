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

#include "driftbench/optimizer/fitness.h"

#include <algorithm>
#include <memory>

#include "driftbench/adaptive/oracle.h"
#include "driftbench/ranking/distance_benchmark.h"

namespace driftbench {

std::uint64_t ShortestStream(const FitnessSpec& spec) {
  std::uint64_t shortest = 0;
  bool first = true;
  for (const auto* s : spec.streams) {
    if (first || s->keys.size() < shortest) shortest = s->keys.size();
    first = false;
  }
  return shortest;
}

FitnessFunction MakeFitness(FitnessSpec spec) {
  if (spec.streams.empty()) throw ValidationError("fitness needs a training stream");
  if (spec.anti_overfitting && spec.streams.size() < 2) {
    throw ValidationError("anti-overfitting mode needs at least two training streams");
  }
  for (const auto* s : spec.streams) {
    if (s == nullptr) throw ValidationError("null training stream");
  }
  auto shared = std::make_shared<const FitnessSpec>(std::move(spec));
  auto oracles = std::make_shared<std::vector<std::shared_ptr<const Oracle>>>();
  for (const auto* s : shared->streams) {
    oracles->push_back(std::make_shared<const Oracle>(s->metadata));
  }
  return [shared, oracles](const Config& config) {
    SamplerSpec sampler = shared->base;
    for (const auto& [path, value] : config) sampler.Set(path, value);
    double hellinger = 0.0;
    double counters = 0.0;
    double time_ms = 0.0;
    for (std::size_t i = 0; i < shared->streams.size(); ++i) {
      const SamplerContext context{(*oracles)[i], shared->seed};
      const NamedSampler named{"candidate", MakeSamplerFactory(sampler, context)};
      const auto run = RunDistanceBenchmark(
          *shared->streams[i], std::span<const NamedSampler>(&named, 1),
          {shared->batch_size, shared->top_k});
      hellinger += run.series.Summarize("candidate", "hellinger").mean;
      counters += run.series.Summarize("candidate", "counters").mean;
      for (double ns : run.timings.Values("candidate", "record_ns")) time_ms += ns / 1e6;
    }
    const double n = static_cast<double>(shared->streams.size());
    return shared->hellinger_weight * hellinger / n +
           shared->counters_weight * counters / n +
           shared->time_ms_weight * time_ms / n;
  };
}

}  // namespace driftbench
