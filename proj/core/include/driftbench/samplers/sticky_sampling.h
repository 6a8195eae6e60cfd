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

#include <unordered_map>

#include "driftbench/generator/rng.h"
#include "driftbench/samplers/sampler.h"

namespace driftbench {

// Sticky Sampling with t = (1 / epsilon) * ln(1 / (support * delta)).
//
// The first 2t elements are sampled at rate r = 1, the next 2t at r = 2, the
// next 4t at r = 4, and so on. An untracked key is admitted with probability
// 1 / r; tracked keys are counted exactly. When the rate doubles, each
// counter is thinned by tossing a fair coin until heads, decrementing on
// every tail, and dropped when it reaches zero.
class StickySampling : public Sampler {
 public:
  // Throws ValidationError unless support, epsilon, delta lie in (0, 1) and
  // epsilon < support.
  StickySampling(double support, double epsilon, double delta,
                 std::uint64_t seed);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override { return counts_.size(); }
  Estimate Snapshot() const override;
  std::string Name() const override { return "sticky_sampling"; }

  double t() const { return t_; }
  std::uint64_t rate() const { return rate_; }

 private:
  void Thin();

  double t_;
  std::uint64_t rate_ = 1;
  std::uint64_t next_boundary_;  // last element sampled at the current rate
  std::uint64_t total_ = 0;
  std::unordered_map<Key, std::uint64_t> counts_;
  Rng rng_;
};

}  // namespace driftbench
