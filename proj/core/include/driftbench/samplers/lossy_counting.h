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

// Lossy Counting with bucket width w = ceil(1 / epsilon).
//
// A key first seen while bucket b_current is open gets error bound
// b_current - 1. At each bucket boundary entries with f + delta <= b_current
// are dropped. Reported counts never exceed true counts and undercount by at
// most epsilon * N.
class LossyCounting : public Sampler {
 public:
  // Throws ValidationError unless 0 < epsilon < 1.
  explicit LossyCounting(double epsilon);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override { return entries_.size(); }
  Estimate Snapshot() const override;
  std::string Name() const override { return "lossy_counting"; }

  std::uint64_t bucket_width() const { return width_; }

 private:
  struct Entry {
    std::uint64_t count;
    std::uint64_t delta;
  };

  std::uint64_t width_;
  std::uint64_t total_ = 0;
  std::uint64_t completed_ = 0;  // finished buckets
  std::unordered_map<Key, Entry> entries_;
};

}  // namespace driftbench
