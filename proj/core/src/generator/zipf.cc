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

#include "driftbench/generator/zipf.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "driftbench/generator/rng.h"

namespace driftbench {

ProbDist ZipfianDist(std::uint64_t num_keys, double exponent,
                     std::optional<std::uint64_t> perm_seed) {
  if (num_keys == 0) throw ValidationError("zipf needs at least one key");
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw ValidationError("zipf exponent must be positive");
  }
  std::vector<Key> rank_to_key(num_keys);
  std::iota(rank_to_key.begin(), rank_to_key.end(), Key{1});
  if (perm_seed) {
    Rng rng(*perm_seed);
    for (std::uint64_t i = num_keys - 1; i > 0; --i) {
      std::swap(rank_to_key[i], rank_to_key[rng.Below(i + 1)]);
    }
  }
  std::vector<ProbDist::Entry> weights;
  weights.reserve(num_keys);
  for (std::uint64_t r = 1; r <= num_keys; ++r) {
    weights.emplace_back(rank_to_key[r - 1],
                         std::pow(static_cast<double>(r), -exponent));
  }
  return ProbDist::Normalize(std::move(weights));
}

ProbDist BuildDistribution(const DistSpec& spec, std::uint64_t num_keys) {
  if (const auto* zipf = std::get_if<ZipfSpec>(&spec.source)) {
    return ZipfianDist(num_keys, zipf->exponent, zipf->perm_seed);
  }
  return ProbDist::FromWeights(std::get<ExplicitSpec>(spec.source).weights);
}

}  // namespace driftbench
