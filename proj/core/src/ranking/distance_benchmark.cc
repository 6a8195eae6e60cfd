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

#include "driftbench/ranking/distance_benchmark.h"

#include <algorithm>
#include <chrono>
#include <memory>

#include "driftbench/adaptive/oracle.h"
#include "driftbench/metrics/distance.h"

namespace driftbench {

DistanceBenchmarkResult RunDistanceBenchmark(const StreamBuffer& stream,
                                             std::span<const NamedSampler> samplers,
                                             const DistanceBenchmarkOptions& options) {
  if (options.batch_size == 0) throw ValidationError("batch size must be >= 1");
  if (options.top_k == 0) throw ValidationError("top-K must be >= 1");
  if (samplers.empty()) throw ValidationError("no samplers to benchmark");
  if (stream.metadata.drifts.empty()) {
    throw ValidationError("distance ranking needs stream metadata with drifts");
  }
  const Oracle oracle(stream.metadata);
  if (oracle.n() < stream.keys.size()) {
    throw ValidationError("stream is longer than its metadata describes");
  }

  std::vector<std::unique_ptr<Sampler>> instances;
  instances.reserve(samplers.size());
  for (const auto& s : samplers) instances.push_back(s.factory());

  DistanceBenchmarkResult result;
  const auto& keys = stream.keys;
  std::uint64_t batch = 0;
  for (std::size_t begin = 0; begin < keys.size(); begin += options.batch_size) {
    const std::size_t end = std::min(keys.size(), begin + options.batch_size);
    ++batch;
    const ProbDist truth = oracle.DistributionAt(end);
    std::vector<Estimate::Entry> truth_entries(truth.entries().begin(),
                                               truth.entries().end());
    const auto reference =
        SelectTopK(std::move(truth_entries), end, TopK{options.top_k})
            .RelativeFrequencies();

    for (std::size_t s = 0; s < instances.size(); ++s) {
      Sampler& sampler = *instances[s];
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t i = begin; i < end; ++i) sampler.Record(keys[i]);
      const auto elapsed = std::chrono::steady_clock::now() - start;
      sampler.Sync(end);
      const double h = HellingerOrSaturate(
          sampler.Query(TopK{options.top_k}).RelativeFrequencies(), reference);
      const std::string& name = samplers[s].name;
      result.series.Add(batch, name, "hellinger", h);
      result.series.Add(batch, name, "counters",
                        static_cast<double>(sampler.CounterCount()));
      result.timings.Add(
          batch, name, "record_ns",
          static_cast<double>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()));
    }
  }

  std::vector<std::pair<double, std::string>> means;
  for (const auto& s : samplers) {
    means.emplace_back(result.series.Summarize(s.name, "hellinger").mean, s.name);
  }
  std::sort(means.begin(), means.end());
  for (auto& m : means) result.ranking.push_back(std::move(m.second));
  return result;
}

}  // namespace driftbench
