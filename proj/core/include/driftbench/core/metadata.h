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
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "driftbench/core/prob_dist.h"
#include "driftbench/core/types.h"

namespace driftbench {

// Zipf over the metadata key universe; ranks are mapped to keys through a
// seeded permutation, or the identity when perm_seed is empty.
struct ZipfSpec {
  double exponent = 1.0;
  std::optional<std::uint64_t> perm_seed;
};

struct ExplicitSpec {
  std::vector<ProbDist::Entry> weights;
};

// Provenance of one distribution used by the stream's drifts.
struct DistSpec {
  std::string id;
  std::variant<ZipfSpec, ExplicitSpec> source;
};

// Drift whose distributions refer to DistSpec entries by index.
struct DriftSpec {
  std::uint64_t length = 0;
  std::uint64_t doubled_mid = 0;
  std::size_t from = 0;
  std::size_t to = 0;
};

// One micro-burst: keys in `faulty_keys` were withheld for the burst's
// duration and `held_counts` of them were released at its end.
struct BurstEvent {
  std::uint64_t start_batch = 0;
  std::uint64_t length_batches = 0;
  std::vector<Key> faulty_keys;              // sorted
  std::map<Key, std::uint64_t> held_counts;  // ascending key order
};

struct StreamMetadata {
  std::uint64_t n = 0;
  std::uint64_t num_keys = 0;
  std::uint64_t seed = 0;
  std::vector<DistSpec> distributions;
  std::vector<DriftSpec> drifts;
  std::vector<BurstEvent> bursts;
};

}  // namespace driftbench
