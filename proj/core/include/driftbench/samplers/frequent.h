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

#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "driftbench/samplers/sampler.h"

namespace driftbench {

// Sliding-window frequent items over the last `windows` basic windows of
// `basic_window` elements each.
//
// The open basic window is counted exactly. When it fills, its k most
// frequent keys (ties towards the smaller key) become a synopsis and the
// oldest synopsis beyond `windows` is dropped. Queries sum the synopses of
// completed windows only.
class Frequent : public Sampler {
 public:
  // Throws ValidationError when any parameter is zero.
  Frequent(std::uint64_t basic_window, std::size_t windows, std::size_t k);

  void Record(Key key) override;
  std::uint64_t TotalProcessed() const override { return total_; }
  std::size_t CounterCount() const override;
  Estimate Snapshot() const override;
  std::string Name() const override { return "frequent"; }

 private:
  using Synopsis = std::vector<std::pair<Key, std::uint64_t>>;

  void CloseWindow();

  std::uint64_t basic_window_;
  std::size_t windows_;
  std::size_t k_;
  std::uint64_t total_ = 0;
  std::uint64_t in_window_ = 0;
  std::unordered_map<Key, std::uint64_t> current_;
  std::deque<Synopsis> synopses_;
  std::map<Key, std::uint64_t> summed_;
  std::size_t synopsis_counters_ = 0;
};

}  // namespace driftbench
