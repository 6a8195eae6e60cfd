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

#include "driftbench/generator/burst.h"

#include <algorithm>

#include "driftbench/generator/rng.h"

namespace driftbench {

void BurstConfig::Validate() const {
  if (!(bsp >= 0.0 && bsp <= 1.0)) throw ValidationError("bsp must lie in [0, 1]");
  if (!(kbp >= 0.0 && kbp <= 1.0)) throw ValidationError("kbp must lie in [0, 1]");
  if (bl_min < 1) throw ValidationError("bl_min must be >= 1");
  if (bl_min > bl_max) throw ValidationError("bl_min must not exceed bl_max");
}

StreamBuffer InjectBursts(const StreamBuffer& source, const BurstConfig& config,
                          std::uint64_t batch_size, std::uint64_t seed) {
  config.Validate();
  if (batch_size == 0) throw ValidationError("batch size must be >= 1");

  const auto& in = source.keys;
  std::uint64_t universe = source.metadata.num_keys;
  if (universe == 0 && !in.empty()) universe = *std::max_element(in.begin(), in.end());

  StreamBuffer out;
  out.metadata = source.metadata;
  out.keys.reserve(in.size());

  Rng rng(seed);
  std::vector<Key> released;  // held items waiting to be emitted
  std::size_t released_pos = 0;
  std::size_t next = 0;
  std::vector<char> faulty;
  bool active = false;
  std::uint64_t end_batch = 0;
  BurstEvent current;

  for (std::uint64_t batch = 1; next < in.size() || released_pos < released.size();
       ++batch) {
    if (!active && next < in.size() && rng.Bernoulli(config.bsp)) {
      active = true;
      current = BurstEvent{};
      current.start_batch = batch;
      current.length_batches = rng.Between(config.bl_min, config.bl_max);
      end_batch = batch + current.length_batches - 1;
      faulty.assign(universe + 1, 0);
      for (Key k = 1; k <= universe; ++k) {
        if (rng.Bernoulli(config.kbp)) {
          faulty[k] = 1;
          current.faulty_keys.push_back(k);
        }
      }
    }

    std::uint64_t emitted = 0;
    while (emitted < batch_size) {
      if (released_pos < released.size()) {
        out.keys.push_back(released[released_pos++]);
        ++emitted;
        continue;
      }
      if (next >= in.size()) break;
      const Key key = in[next++];
      if (active && key <= universe && faulty[key]) {
        ++current.held_counts[key];
        continue;
      }
      out.keys.push_back(key);
      ++emitted;
    }
    if (released_pos == released.size()) {
      released.clear();
      released_pos = 0;
    }

    if (active && (batch == end_batch || next >= in.size())) {
      for (const auto& [key, count] : current.held_counts) {
        released.insert(released.end(), count, key);
      }
      out.metadata.bursts.push_back(std::move(current));
      current = BurstEvent{};
      active = false;
    }
  }
  return out;
}

}  // namespace driftbench
