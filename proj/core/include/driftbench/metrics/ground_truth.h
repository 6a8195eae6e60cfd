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

#include <span>

#include "driftbench/core/estimate.h"

namespace driftbench {

// Exact count of every key in the stream.
Estimate ExactFrequencies(std::span<const Key> stream);

// Exact counts filtered exactly like a sampler query.
Estimate GroundTruth(std::span<const Key> stream, TopK top);
Estimate GroundTruth(std::span<const Key> stream, Threshold threshold);

}  // namespace driftbench
