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
#include <string>

#include "driftbench/core/types.h"

namespace driftbench {

// Identity of a benchmark run. Two imbalance runs may be ranked against each
// other only when every field except sampler_spec matches.
struct RunFingerprint {
  std::string stream_id;
  std::uint64_t num_partitions = 0;
  std::string decider_spec;
  std::string repartitioner_spec;
  std::uint64_t batch_size = 0;
  std::string sampler_spec;
  std::uint64_t seed = 0;

  // field=value lines in a fixed order.
  std::string Canonical() const;
  // 16 lowercase hex digits of FNV-1a 64 over Canonical().
  std::string Digest() const;

  friend bool operator==(const RunFingerprint&, const RunFingerprint&) = default;
};

class FingerprintMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Throws FingerprintMismatch naming the first differing field.
void RequireComparable(const RunFingerprint& a, const RunFingerprint& b);

// 16 lowercase hex digits.
std::string HexDigest(std::uint64_t value);

}  // namespace driftbench
