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
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "driftbench/core/estimate.h"
#include "driftbench/core/prob_dist.h"

namespace driftbench {

// Streaming frequency estimator. Implementations consume keys one at a time
// and answer queries from whatever state they keep.
class Sampler {
 public:
  virtual ~Sampler() = default;

  virtual void Record(Key key) = 0;
  // Number of elements recorded since construction.
  virtual std::uint64_t TotalProcessed() const = 0;
  // Number of counters currently held; used as the memory measure.
  virtual std::size_t CounterCount() const = 0;
  // Every counter the sampler reports, with the total it covers.
  virtual Estimate Snapshot() const = 0;
  // Global stream position hint from a driver that splits one stream across
  // several samplers. Ignored by everything except the oracle.
  virtual void Sync(std::uint64_t /*stream_position*/) {}
  virtual std::string Name() const = 0;

  Estimate Query(TopK top) const;
  Estimate Query(Threshold threshold) const;
  Estimate QueryAll() const { return Snapshot(); }
  // Reported counts normalised to sum to 1; nullopt when nothing is held.
  std::optional<ProbDist> RelativeFrequencies() const;
};

using SamplerFactory = std::function<std::unique_ptr<Sampler>()>;

}  // namespace driftbench
