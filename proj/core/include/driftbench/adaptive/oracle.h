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

#include <memory>

#include "driftbench/core/drift.h"
#include "driftbench/core/metadata.h"
#include "driftbench/samplers/sampler.h"

namespace driftbench {

// Knows how a stream was generated and reports its true distribution at any
// index: the interpolated mixture inside a gradual drift, otherwise the
// target of the governing drift.
class Oracle {
 public:
  // Both throw ValidationError for an invalid drift set.
  explicit Oracle(DriftSet set);
  explicit Oracle(const StreamMetadata& metadata);

  std::uint64_t n() const { return timeline_.n(); }
  // Throws std::out_of_range unless 1 <= i <= n.
  ProbDist DistributionAt(std::uint64_t i) const;

 private:
  DriftSet set_;
  DriftTimeline timeline_;
};

ProbDist OracleDistribution(const StreamMetadata& metadata, std::uint64_t i);
ProbDist OracleDistribution(const DriftSet& set, std::uint64_t i);

// Sampler face of the oracle. Reports the true distribution at the current
// stream position scaled by the number of elements it was fed. The position
// follows its own record count unless a driver calls Sync.
class OracleSampler : public Sampler {
 public:
  explicit OracleSampler(std::shared_ptr<const Oracle> oracle);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override { return 0; }
  Estimate Snapshot() const override;
  void Sync(std::uint64_t stream_position) override { position_ = stream_position; }
  std::string Name() const override { return "oracle"; }

 private:
  std::shared_ptr<const Oracle> oracle_;
  std::uint64_t total_ = 0;
  std::uint64_t position_ = 0;
};

}  // namespace driftbench
