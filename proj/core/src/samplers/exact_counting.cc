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

#include "driftbench/samplers/exact_counting.h"

#include <algorithm>

namespace driftbench {

void ExactCounting::Record(Key key) {
  ++counts_[key];
  ++total_;
}

Estimate ExactCounting::Snapshot() const {
  std::vector<Estimate::Entry> counters;
  counters.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    counters.emplace_back(key, static_cast<double>(count));
  }
  return SelectAll(std::move(counters), total_);
}

}  // namespace driftbench
