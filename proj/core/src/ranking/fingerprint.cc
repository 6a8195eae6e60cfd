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

#include "driftbench/ranking/fingerprint.h"

#include <cstdio>

#include "driftbench/generator/rng.h"

namespace driftbench {

std::string RunFingerprint::Canonical() const {
  std::string out;
  out += "stream_id=" + stream_id + "\n";
  out += "num_partitions=" + std::to_string(num_partitions) + "\n";
  out += "decider=" + decider_spec + "\n";
  out += "repartitioner=" + repartitioner_spec + "\n";
  out += "batch_size=" + std::to_string(batch_size) + "\n";
  out += "sampler=" + sampler_spec + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  return out;
}

std::string HexDigest(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string RunFingerprint::Digest() const { return HexDigest(Fnv1a64(Canonical())); }

void RequireComparable(const RunFingerprint& a, const RunFingerprint& b) {
  auto check = [](bool same, const char* field) {
    if (!same) {
      throw FingerprintMismatch(std::string("runs are not comparable: ") + field +
                                " differs");
    }
  };
  check(a.stream_id == b.stream_id, "stream");
  check(a.num_partitions == b.num_partitions, "number of partitions");
  check(a.decider_spec == b.decider_spec, "decider");
  check(a.repartitioner_spec == b.repartitioner_spec, "repartitioner");
  check(a.batch_size == b.batch_size, "batch size");
  check(a.seed == b.seed, "seed");
}

}  // namespace driftbench
