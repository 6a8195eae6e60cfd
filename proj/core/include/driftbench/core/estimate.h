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
#include <optional>
#include <utility>
#include <vector>

#include "driftbench/core/prob_dist.h"
#include "driftbench/core/types.h"

namespace driftbench {

// Query mode: at most `k` keys with the highest estimated counts.
struct TopK {
  std::size_t k;
};

// Query mode: every key whose estimated count is at least phi * total.
struct Threshold {
  double phi;
};

// A sampler answer: estimated counts per key plus the number of elements
// the estimate covers.
struct Estimate {
  using Entry = std::pair<Key, double>;

  std::vector<Entry> counts;  // sorted by key
  std::uint64_t total = 0;

  bool empty() const { return counts.empty(); }
  double CountOf(Key key) const;
  double SumOfCounts() const;

  // Counts normalised by their own sum; nullopt when nothing is reported.
  std::optional<ProbDist> RelativeFrequencies() const;
};

// Both selectors sort the result by key. Ties in TopK are broken towards the
// smaller key. TopK with k == 0 and phi outside [0, 1] throw ValidationError.
Estimate SelectTopK(std::vector<Estimate::Entry> counters, std::uint64_t total,
                    TopK top);
Estimate SelectThreshold(std::vector<Estimate::Entry> counters,
                         std::uint64_t total, Threshold threshold);
Estimate SelectAll(std::vector<Estimate::Entry> counters, std::uint64_t total);

}  // namespace driftbench
