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

#include "driftbench/generator/stream.h"
#include "driftbench/optimizer/optimizer.h"
#include "driftbench/ranking/sampler_spec.h"

namespace driftbench {

// Weighted benchmark score averaged over training streams:
//   w_h * mean Hellinger + w_c * mean counters + w_t * record milliseconds.
// Time is wall-clock, so a non-zero time weight makes results
// machine-dependent.
struct FitnessSpec {
  SamplerSpec base;  // parameters of a config are written into a copy
  std::vector<const StreamBuffer*> streams;
  std::uint64_t batch_size = 30000;
  std::size_t top_k = 300;
  std::uint64_t seed = 0;
  double hellinger_weight = 1.0;
  double counters_weight = 0.0;
  double time_ms_weight = 0.0;
  // Requires at least two training streams.
  bool anti_overfitting = true;
};

// Throws ValidationError when no stream is given, or fewer than two with
// anti_overfitting set.
FitnessFunction MakeFitness(FitnessSpec spec);

// Length of the shortest training stream.
std::uint64_t ShortestStream(const FitnessSpec& spec);

}  // namespace driftbench
