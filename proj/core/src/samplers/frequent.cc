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

#include "driftbench/samplers/frequent.h"

#include <algorithm>

namespace driftbench {

Frequent::Frequent(std::uint64_t basic_window, std::size_t windows,
                   std::size_t k)
    : basic_window_(basic_window), windows_(windows), k_(k) {
  if (basic_window == 0 || windows == 0 || k == 0) {
    throw ValidationError("frequent needs basic_window, windows and k >= 1");
  }
}

void Frequent::Record(Key key) {
  ++total_;
  ++current_[key];
  if (++in_window_ == basic_window_) CloseWindow();
}

void Frequent::CloseWindow() {
  Synopsis top(current_.begin(), current_.end());
  const std::size_t keep = std::min(k_, top.size());
  auto by_count = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  std::partial_sort(top.begin(), top.begin() + keep, top.end(), by_count);
  top.resize(keep);
  for (const auto& [key, count] : top) summed_[key] += count;
  synopsis_counters_ += top.size();
  synopses_.push_back(std::move(top));

  if (synopses_.size() > windows_) {
    for (const auto& [key, count] : synopses_.front()) {
      auto it = summed_.find(key);
      if ((it->second -= count) == 0) summed_.erase(it);
    }
    synopsis_counters_ -= synopses_.front().size();
    synopses_.pop_front();
  }
  current_.clear();
  in_window_ = 0;
}

std::size_t Frequent::CounterCount() const {
  return synopsis_counters_ + current_.size();
}

Estimate Frequent::Snapshot() const {
  std::vector<Estimate::Entry> counters;
  counters.reserve(summed_.size());
  for (const auto& [key, count] : summed_) {
    counters.emplace_back(key, static_cast<double>(count));
  }
  const std::uint64_t covered = synopses_.size() * basic_window_;
  return SelectAll(std::move(counters), covered);
}

}  // namespace driftbench
