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
#include <vector>

#include "driftbench/core/drift.h"
#include "driftbench/core/metadata.h"
#include "driftbench/core/prob_dist.h"

namespace driftbench {

// A finite key stream together with the metadata it was generated from.
struct StreamBuffer {
  std::vector<Key> keys;
  StreamMetadata metadata;
};

// Picks `from` when r > p, otherwise `to`.
inline const ProbDist& DeltaChoose(double p, const ProbDist& from,
                                   const ProbDist& to, double r) {
  return r > p ? from : to;
}

// Inverse-CDF sampling table over a distribution.
class CumulativeTable {
 public:
  explicit CumulativeTable(const ProbDist& dist);
  // u is uniform in [0, 1).
  Key Draw(double u) const;

 private:
  std::vector<Key> keys_;
  std::vector<double> cumulative_;
};

// Materialises the metadata's drifts; each DistSpec is built once and shared
// by every drift that references it.
DriftSet MaterializeDrifts(const StreamMetadata& metadata);

// Generates n = set.n keys. Inside a gradual drift each item draws a fresh
// uniform R to choose between the drift's distributions, then one uniform to
// pick the key; every other item draws only the key, from the governing
// drift's target distribution. Equal (set, seed) give identical streams.
// Metadata records explicit specs for the distributions.
// Throws ValidationError when the drift set is invalid.
StreamBuffer GenerateStream(const DriftSet& set, std::uint64_t seed);

// Generates from metadata specs (zipf or explicit) using metadata.seed.
StreamBuffer GenerateStream(const StreamMetadata& metadata);

}  // namespace driftbench
