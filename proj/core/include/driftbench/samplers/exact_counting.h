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

#include "driftbench/samplers/sampler.h"

namespace driftbench {

// One counter per distinct key seen.
class ExactCounting : public Sampler {
 public:
  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override { return counts_.size(); }
  Estimate Snapshot() const override;
  std::string Name() const override { return "exact"; }

 private:
  std::unordered_map<Key, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace driftbench
