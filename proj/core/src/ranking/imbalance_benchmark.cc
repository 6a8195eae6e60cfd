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

#include "driftbench/ranking/imbalance_benchmark.h"

#include <algorithm>
#include <map>

#include "driftbench/metrics/imbalance.h"

namespace driftbench {

ImbalanceBenchmarkResult RunImbalanceBenchmark(const StreamBuffer& stream,
                                               const std::string& algorithm,
                                               const SamplerFactory& factory,
                                               const ImbalanceBenchmarkOptions& options) {
  const std::size_t m = options.partitions;
  if (m == 0) throw ValidationError("partition count must be >= 1");
  if (options.batch_size == 0) throw ValidationError("batch size must be >= 1");
  if (options.top_k == 0) throw ValidationError("top-K must be >= 1");
  if (!options.decider || !options.repartitioner) {
    throw ValidationError("imbalance benchmark needs a decider and a repartitioner");
  }
  if (!factory) throw ValidationError("imbalance benchmark needs a sampler");

  std::vector<std::unique_ptr<Sampler>> stage_one;
  for (std::size_t j = 0; j < m; ++j) stage_one.push_back(factory());

  ImbalanceBenchmarkResult result;
  Partitioning current(m);
  const auto& keys = stream.keys;
  std::uint64_t batch = 0;
  for (std::size_t begin = 0; begin < keys.size(); begin += options.batch_size) {
    const std::size_t end = std::min(keys.size(), begin + options.batch_size);
    ++batch;
    std::vector<std::uint64_t> loads(m, 0);
    for (std::size_t i = begin; i < end; ++i) {
      const Key key = keys[i];
      stage_one[HashPartition(key, m)]->Record(key);
      ++loads[current.Route(key)];
    }

    const std::vector<double> as_double(loads.begin(), loads.end());
    result.series.Add(batch, algorithm, "imbalance", PercentImbalance(as_double));
    result.loads.push_back(std::move(loads));

    std::map<Key, double> summed;
    std::uint64_t covered = 0;
    for (auto& sampler : stage_one) {
      sampler->Sync(end);
      const Estimate part = sampler->Query(TopK{options.top_k});
      for (const auto& [key, count] : part.counts) summed[key] += count;
      covered += part.total;
    }
    Estimate aggregate{{summed.begin(), summed.end()}, covered};

    const bool fire = options.decider->ShouldRepartition(current, aggregate);
    if (fire) current = options.repartitioner->Build(aggregate, m);
    result.series.Add(batch, algorithm, "repartitioned", fire ? 1.0 : 0.0);
  }
  return result;
}

}  // namespace driftbench
