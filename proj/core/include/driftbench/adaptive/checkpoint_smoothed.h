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

// Replaces the main sampler only when a fresh secondary sampler disagrees
// with it.
//
// When more than cw elements have passed since the last checkpoint a
// secondary sampler is spawned. Once it has recorded more than ct elements
// the Hellinger distance between both samplers' relative frequencies is
// compared with et: above it, the secondary becomes the main sampler. Either
// way the secondary is dropped and the checkpoint moves to the current
// element. Only the main sampler answers queries.
class CheckpointSmoothed : public Sampler {
 public:
  // Throws ValidationError when cw or ct is zero, et <= 0, or the factory is
  // empty.
  CheckpointSmoothed(SamplerFactory factory, std::uint64_t checkpoint_window,
                     std::uint64_t check_threshold, double error_threshold);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override;
  Estimate Snapshot() const override { return main_->Snapshot(); }
  std::string Name() const override { return "checkpoint_smoothed"; }

  const Sampler& main() const { return *main_; }
  const Sampler* secondary() const { return secondary_.get(); }
  std::uint64_t replacements() const { return replacements_; }
  std::uint64_t checks() const { return checks_; }
  // Distance computed at the most recent check, or -1 before the first.
  double last_distance() const { return last_distance_; }

 private:
  SamplerFactory factory_;
  std::uint64_t checkpoint_window_;
  std::uint64_t check_threshold_;
  double error_threshold_;
  std::uint64_t total_ = 0;
  std::uint64_t checkpoint_ = 0;
  std::uint64_t replacements_ = 0;
  std::uint64_t checks_ = 0;
  double last_distance_ = -1.0;
  std::unique_ptr<Sampler> main_;
  std::unique_ptr<Sampler> secondary_;
};

}  // namespace driftbench
