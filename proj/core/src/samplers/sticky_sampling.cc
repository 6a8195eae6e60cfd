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

#include "driftbench/samplers/sticky_sampling.h"

#include <cmath>
#include <iterator>

namespace driftbench {

StickySampling::StickySampling(double support, double epsilon, double delta,
                               std::uint64_t seed)
    : rng_(seed) {
  auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_unit(support) || !in_unit(epsilon) || !in_unit(delta)) {
    throw ValidationError("sticky sampling parameters must lie in (0, 1)");
  }
  if (!(epsilon < support)) {
    throw ValidationError("sticky sampling needs epsilon < support");
  }
  t_ = std::log(1.0 / (support * delta)) / epsilon;
  next_boundary_ = static_cast<std::uint64_t>(std::ceil(2.0 * t_));
  if (next_boundary_ == 0) next_boundary_ = 1;
}

void StickySampling::Thin() {
  for (auto it = counts_.begin(); it != counts_.end();) {
    while (it->second > 0 && rng_.Bernoulli(0.5)) --it->second;
    it = it->second == 0 ? counts_.erase(it) : std::next(it);
  }
}

void StickySampling::Record(Key key) {
  if (total_ == next_boundary_) {
    // Rate r covers elements up to 2rt: windows of 2t, 2t, 4t, 8t, ...
    next_boundary_ *= 2;
    rate_ *= 2;
    Thin();
  }
  ++total_;
  if (auto it = counts_.find(key); it != counts_.end()) {
    ++it->second;
  } else if (rate_ == 1 || rng_.Below(rate_) == 0) {
    counts_.emplace(key, 1);
  }
}

Estimate StickySampling::Snapshot() const {
  std::vector<Estimate::Entry> counters;
  counters.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    counters.emplace_back(key, static_cast<double>(count));
  }
  return SelectAll(std::move(counters), total_);
}

}  // namespace driftbench
