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

#include "driftbench/metrics/ground_truth.h"

#include <unordered_map>

namespace driftbench {
namespace {

std::vector<Estimate::Entry> Count(std::span<const Key> stream) {
  std::unordered_map<Key, std::uint64_t> counts;
  for (Key k : stream) ++counts[k];
  std::vector<Estimate::Entry> out;
  out.reserve(counts.size());
  for (const auto& [key, c] : counts) out.emplace_back(key, static_cast<double>(c));
  return out;
}

}  // namespace

Estimate ExactFrequencies(std::span<const Key> stream) {
  return SelectAll(Count(stream), stream.size());
}

Estimate GroundTruth(std::span<const Key> stream, TopK top) {
  return SelectTopK(Count(stream), stream.size(), top);
}

Estimate GroundTruth(std::span<const Key> stream, Threshold threshold) {
  return SelectThreshold(Count(stream), stream.size(), threshold);
}

}  // namespace driftbench
