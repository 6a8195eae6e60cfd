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

#include "driftbench/samplers/sampler.h"

namespace driftbench {

// Keeps a main sampler and periodically grows a secondary one alongside it.
//
// Once the main sampler has recorded t + st elements a secondary sampler is
// spawned; both record until the secondary has seen st elements, at which
// point it replaces the main one. Only the main sampler answers queries.
// A promoted sampler already holds st records, so every main sampler after
// the first lives t + 2 * st elements before it is replaced.
class TemporalSmoothed : public Sampler {
 public:
  // Throws ValidationError when threshold or switch_threshold is zero or
  // the factory is empty.
  TemporalSmoothed(SamplerFactory factory, std::uint64_t threshold,
                   std::uint64_t switch_threshold);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override;
  Estimate Snapshot() const override { return main_->Snapshot(); }
  std::string Name() const override { return "temporal_smoothed"; }

  const Sampler& main() const { return *main_; }
  // Null outside the overlap phase.
  const Sampler* secondary() const { return secondary_.get(); }
  std::uint64_t promotions() const { return promotions_; }

 private:
  SamplerFactory factory_;
  std::uint64_t threshold_;
  std::uint64_t switch_threshold_;
  std::uint64_t total_ = 0;
  std::uint64_t promotions_ = 0;
  std::unique_ptr<Sampler> main_;
  std::unique_ptr<Sampler> secondary_;
};

}  // namespace driftbench
