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

#include "driftbench/generator/stream.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "driftbench/generator/rng.h"
#include "driftbench/generator/zipf.h"

namespace driftbench {

CumulativeTable::CumulativeTable(const ProbDist& dist) {
  keys_.reserve(dist.size());
  cumulative_.reserve(dist.size());
  double running = 0.0;
  for (const auto& [key, weight] : dist.entries()) {
    running += weight;
    keys_.push_back(key);
    cumulative_.push_back(running);
  }
  if (keys_.empty()) throw ValidationError("cannot sample an empty distribution");
}

Key CumulativeTable::Draw(double u) const {
  const double target = u * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
  if (idx >= keys_.size()) idx = keys_.size() - 1;
  return keys_[idx];
}

DriftSet MaterializeDrifts(const StreamMetadata& metadata) {
  std::vector<DistPtr> built;
  built.reserve(metadata.distributions.size());
  for (const auto& spec : metadata.distributions) {
    built.push_back(Share(BuildDistribution(spec, metadata.num_keys)));
  }
  DriftSet set;
  set.n = metadata.n;
  for (const auto& d : metadata.drifts) {
    if (d.from >= built.size() || d.to >= built.size()) {
      throw ValidationError("drift references an unknown distribution");
    }
    set.drifts.push_back(Drift{d.length, d.doubled_mid, built[d.from], built[d.to]});
  }
  return set;
}

namespace {

std::vector<Key> GenerateKeys(const DriftSet& set, std::uint64_t seed) {
  const auto report = ValidateDriftSet(set);
  if (!report.ok()) {
    throw ValidationError("invalid drift set:\n" + report.ToString());
  }
  const DriftTimeline timeline(set);
  std::map<const ProbDist*, CumulativeTable> tables;
  auto table_for = [&tables](const DistPtr& dist) -> const CumulativeTable& {
    auto it = tables.find(dist.get());
    if (it == tables.end()) it = tables.emplace(dist.get(), CumulativeTable(*dist)).first;
    return it->second;
  };
  // Every index of a segment must fall under exactly the rule the segment is
  // generated with.
  auto expect_rule = [&timeline](std::uint64_t i, GenerationRule rule,
                                 std::size_t drift) {
    const auto got = timeline.Locate(i);
    if (got.rule != rule || got.drift != drift) {
      throw std::logic_error("generation rule mismatch at index " +
                             std::to_string(i));
    }
  };

  Rng rng(seed);
  std::vector<Key> keys;
  keys.reserve(set.n);
  const auto& order = timeline.order();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t idx = order[k];
    const Drift& d = set.drifts[idx];
    const auto start = static_cast<std::uint64_t>(d.start());
    const std::uint64_t segment_end =
        k + 1 < order.size()
            ? static_cast<std::uint64_t>(set.drifts[order[k + 1]].start()) - 1
            : set.n;
    const CumulativeTable& to_table = table_for(d.to);
    std::uint64_t i = start;
    if (d.IsGradual()) {
      const auto end = static_cast<std::uint64_t>(d.end());
      expect_rule(start, GenerationRule::kInsideGradual, idx);
      expect_rule(end, GenerationRule::kInsideGradual, idx);
      const CumulativeTable& from_table = table_for(d.from);
      for (; i <= end; ++i) {
        const double p = DriftTimeline::Progress(d, i);
        const double r = rng.Uniform();
        const CumulativeTable& chosen =
            &DeltaChoose(p, *d.from, *d.to, r) == d.from.get() ? from_table
                                                                 : to_table;
        keys.push_back(chosen.Draw(rng.Uniform()));
      }
    } else {
      expect_rule(start, GenerationRule::kAtAbrupt, idx);
      keys.push_back(to_table.Draw(rng.Uniform()));
      ++i;
    }
    if (i <= segment_end) {
      expect_rule(i, GenerationRule::kAfterDriftEnd, idx);
      expect_rule(segment_end, GenerationRule::kAfterDriftEnd, idx);
    }
    for (; i <= segment_end; ++i) keys.push_back(to_table.Draw(rng.Uniform()));
  }
  return keys;
}

}  // namespace

StreamBuffer GenerateStream(const DriftSet& set, std::uint64_t seed) {
  StreamBuffer out;
  out.keys = GenerateKeys(set, seed);
  StreamMetadata& md = out.metadata;
  md.n = set.n;
  md.seed = seed;
  std::map<const ProbDist*, std::size_t> ids;
  auto spec_index = [&](const DistPtr& dist) {
    auto [it, inserted] = ids.emplace(dist.get(), md.distributions.size());
    if (inserted) {
      md.distributions.push_back(
          DistSpec{"d" + std::to_string(it->second),
                   ExplicitSpec{{dist->entries().begin(), dist->entries().end()}}});
      for (const auto& e : dist->entries()) md.num_keys = std::max(md.num_keys, e.first);
    }
    return it->second;
  };
  for (const auto& d : set.drifts) {
    const std::size_t from = spec_index(d.from);
    const std::size_t to = spec_index(d.to);
    md.drifts.push_back(DriftSpec{d.length, d.doubled_mid, from, to});
  }
  return out;
}

StreamBuffer GenerateStream(const StreamMetadata& metadata) {
  StreamBuffer out;
  out.keys = GenerateKeys(MaterializeDrifts(metadata), metadata.seed);
  out.metadata = metadata;
  return out;
}

}  // namespace driftbench
