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
#include <optional>

#include "driftbench/core/metadata.h"
#include "driftbench/core/prob_dist.h"

namespace driftbench {

// Zipf distribution over [1, num_keys]: rank r has weight r^-exponent / H,
// with H the sum over all ranks. Ranks map to keys through a Fisher-Yates
// permutation seeded by perm_seed, or the identity when it is empty.
// Throws ValidationError when num_keys == 0 or exponent <= 0.
ProbDist ZipfianDist(std::uint64_t num_keys, double exponent,
                     std::optional<std::uint64_t> perm_seed);

// Builds the distribution described by a metadata entry.
ProbDist BuildDistribution(const DistSpec& spec, std::uint64_t num_keys);

}  // namespace driftbench
