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

// Restarts an inner sampler every `window` elements, so answers only cover
// the elements since the last landmark.
class Landmark : public Sampler {
 public:
  // Throws ValidationError when window == 0 or the factory is empty.
  Landmark(SamplerFactory factory, std::uint64_t window);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override { return inner_->CounterCount(); }
  Estimate Snapshot() const override { return inner_->Snapshot(); }
  std::string Name() const override { return "landmark"; }

 private:
  SamplerFactory factory_;
  std::uint64_t window_;
  std::uint64_t total_ = 0;
  std::unique_ptr<Sampler> inner_;
};

}  // namespace driftbench
