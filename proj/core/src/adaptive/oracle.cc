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

#include "driftbench/adaptive/oracle.h"

#include "driftbench/generator/stream.h"

namespace driftbench {
namespace {

DriftSet Checked(DriftSet set) {
  const auto report = ValidateDriftSet(set);
  if (!report.ok()) {
    throw ValidationError("invalid drift set:\n" + report.ToString());
  }
  return set;
}

}  // namespace

Oracle::Oracle(DriftSet set) : set_(Checked(std::move(set))), timeline_(set_) {}

Oracle::Oracle(const StreamMetadata& metadata)
    : Oracle(MaterializeDrifts(metadata)) {}

ProbDist Oracle::DistributionAt(std::uint64_t i) const {
  const GoverningDrift g = timeline_.Locate(i);
  const Drift& d = set_.drifts[g.drift];
  if (g.rule == GenerationRule::kInsideGradual) {
    return ProbDist::Mixture(*d.from, *d.to, DriftTimeline::Progress(d, i));
  }
  return *d.to;
}

ProbDist OracleDistribution(const StreamMetadata& metadata, std::uint64_t i) {
  return Oracle(metadata).DistributionAt(i);
}

ProbDist OracleDistribution(const DriftSet& set, std::uint64_t i) {
  return Oracle(set).DistributionAt(i);
}

OracleSampler::OracleSampler(std::shared_ptr<const Oracle> oracle)
    : oracle_(std::move(oracle)) {
  if (!oracle_) throw ValidationError("oracle sampler needs an oracle");
}

void OracleSampler::Record(Key /*key*/) {
  ++total_;
  ++position_;
}

Estimate OracleSampler::Snapshot() const {
  Estimate out;
  out.total = total_;
  if (total_ == 0 || position_ == 0) return out;
  const std::uint64_t at = std::min(position_, oracle_->n());
  const ProbDist dist = oracle_->DistributionAt(at);
  out.counts.reserve(dist.size());
  for (const auto& [key, p] : dist.entries()) {
    out.counts.emplace_back(key, p * static_cast<double>(total_));
  }
  return out;
}

}  // namespace driftbench
