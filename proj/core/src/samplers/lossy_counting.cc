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

#include "driftbench/samplers/lossy_counting.h"

#include <cmath>

namespace driftbench {

LossyCounting::LossyCounting(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ValidationError("lossy counting epsilon must lie in (0, 1)");
  }
  width_ = static_cast<std::uint64_t>(std::ceil(1.0 / epsilon));
}

void LossyCounting::Record(Key key) {
  ++total_;
  // Pruning lags one bucket behind: a boundary drops entries that could not
  // have survived the buckets closed before it.
  const std::uint64_t delta = completed_ > 0 ? completed_ - 1 : 0;
  auto [it, inserted] = entries_.try_emplace(key, Entry{0, delta});
  ++it->second.count;
  if (total_ % width_ == 0) {
    std::erase_if(entries_, [this](const auto& kv) {
      return kv.second.count + kv.second.delta <= completed_;
    });
    ++completed_;
  }
}

Estimate LossyCounting::Snapshot() const {
  std::vector<Estimate::Entry> counters;
  counters.reserve(entries_.size());
  for (const auto& [key, e] : entries_) {
    counters.emplace_back(key, static_cast<double>(e.count));
  }
  return SelectAll(std::move(counters), total_);
}

}  // namespace driftbench
