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

#include "driftbench/samplers/space_saving.h"

#include <iterator>

namespace driftbench {

SpaceSaving::SpaceSaving(std::size_t counters) : capacity_(counters) {
  if (counters == 0) throw ValidationError("space saving needs counters >= 1");
  index_.reserve(counters);
}

void SpaceSaving::Increment(Slot& slot) {
  const BucketIt from = slot.bucket;
  BucketIt to = std::next(from);
  if (to == buckets_.end() || to->count != from->count + 1) {
    to = buckets_.insert(to, Bucket{from->count + 1, {}});
  }
  to->keys.splice(to->keys.begin(), from->keys, slot.pos);
  slot.bucket = to;
  if (from->keys.empty()) buckets_.erase(from);
}

void SpaceSaving::Record(Key key) {
  ++total_;
  if (auto it = index_.find(key); it != index_.end()) {
    Increment(it->second);
    return;
  }
  if (index_.size() < capacity_) {
    if (buckets_.empty() || buckets_.front().count != 1) {
      buckets_.push_front(Bucket{1, {}});
    }
    BucketIt ones = buckets_.begin();
    ones->keys.push_front(key);
    index_.emplace(key, Slot{ones, ones->keys.begin()});
    return;
  }
  // Evict the front of the minimum bucket and reuse its slot.
  BucketIt min = buckets_.begin();
  auto node = index_.extract(min->keys.front());
  min->keys.front() = key;
  node.key() = key;
  auto inserted = index_.insert(std::move(node));
  Increment(inserted.position->second);
}

Estimate SpaceSaving::Snapshot() const {
  std::vector<Estimate::Entry> counters;
  counters.reserve(index_.size());
  for (const auto& [key, slot] : index_) {
    counters.emplace_back(key, static_cast<double>(slot.bucket->count));
  }
  return SelectAll(std::move(counters), total_);
}

}  // namespace driftbench
