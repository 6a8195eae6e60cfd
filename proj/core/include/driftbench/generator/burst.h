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

#include <cstdint>

#include "driftbench/generator/stream.h"

namespace driftbench {

struct BurstConfig {
  double bsp = 0.0;  // burst start probability per micro-batch
  double kbp = 0.0;  // per-key probability of being faulty during a burst
  std::uint64_t bl_min = 1;  // burst length bounds, in micro-batches
  std::uint64_t bl_max = 1;

  // Throws ValidationError unless probabilities lie in [0, 1] and
  // 1 <= bl_min <= bl_max.
  void Validate() const;
};

// Replays `source` in micro-batches of `batch_size` emitted items.
//
// Before each micro-batch, when no burst is active, a burst starts with
// probability bsp: its length is drawn uniformly from [bl_min, bl_max] and
// every key of the universe [1, num_keys] becomes faulty with probability
// kbp. While the burst lasts, faulty keys are held back and counted. When
// the burst's last batch ends the held items are released at once, grouped
// by ascending key, ahead of any newly loaded item. The output is a
// permutation of the input; each burst is appended to metadata.bursts.
// Throws ValidationError for batch_size == 0 or an invalid config.
StreamBuffer InjectBursts(const StreamBuffer& source, const BurstConfig& config,
                          std::uint64_t batch_size, std::uint64_t seed);

}  // namespace driftbench
