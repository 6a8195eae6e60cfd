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

#include <list>
#include <unordered_map>

#include "driftbench/samplers/sampler.h"

namespace driftbench {

// Space Saving with m counters kept in a stream-summary structure: buckets
// of equal count in ascending order, so increments and evictions are O(1).
//
// When all counters are taken, the counter evicted is the most recently
// touched one among those holding the minimum count; the newcomer inherits
// min + 1. Counts overestimate by at most N / m.
class SpaceSaving : public Sampler {
 public:
  // Throws ValidationError when counters == 0.
  explicit SpaceSaving(std::size_t counters);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override { return index_.size(); }
  Estimate Snapshot() const override;
  std::string Name() const override { return "space_saving"; }

  std::size_t capacity() const { return capacity_; }

 private:
  struct Bucket {
    std::uint64_t count;
    std::list<Key> keys;  // front is the most recently touched
  };
  using BucketIt = std::list<Bucket>::iterator;
  struct Slot {
    BucketIt bucket;
    std::list<Key>::iterator pos;
  };

  // Moves the key in `slot` to the bucket holding count + 1.
  void Increment(Slot& slot);

  std::size_t capacity_;
  std::uint64_t total_ = 0;
  std::list<Bucket> buckets_;  // ascending count
  std::unordered_map<Key, Slot> index_;
};

}  // namespace driftbench
