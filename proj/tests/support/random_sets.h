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

// Seeded generators of random valid inputs for property tests.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "driftbench/core/concept.h"
#include "driftbench/core/drift.h"
#include "driftbench/core/prob_dist.h"
#include "driftbench/generator/rng.h"

namespace driftbench::testing {

// Random weights over a random subset of [1, max_key].
inline DistPtr RandomDist(Rng& rng, Key max_key = 12) {
  const std::uint64_t support = rng.Between(1, max_key);
  std::vector<ProbDist::Entry> masses;
  for (std::uint64_t i = 0; i < support; ++i) {
    masses.emplace_back(rng.Between(1, max_key), rng.Uniform() + 1e-3);
  }
  return Share(ProbDist::Normalize(std::move(masses)));
}

// Valid drift set (continuity included) with n in [min_n, max_n] and at most
// max_drifts drifts. Consecutive drifts share distribution objects.
inline DriftSet RandomDriftSet(Rng& rng, std::uint64_t max_n = 1000,
                               std::size_t max_drifts = 8, std::uint64_t min_n = 2) {
  DriftSet set;
  set.n = rng.Between(min_n, max_n);
  DistPtr current = RandomDist(rng);
  set.drifts.push_back(Drift::Abrupt(1, current, current));
  const std::size_t extra = rng.Below(max_drifts);
  std::uint64_t cursor = 2;  // first free index
  for (std::size_t k = 0; k < extra && cursor <= set.n; ++k) {
    const std::uint64_t room = set.n - cursor + 1;
    const std::uint64_t gap = rng.Below(std::max<std::uint64_t>(1, room / 4));
    const std::uint64_t start = cursor + gap;
    if (start > set.n) break;
    DistPtr next = rng.Bernoulli(0.2) ? current : RandomDist(rng);
    const bool gradual = start < set.n && rng.Bernoulli(0.6);
    if (gradual) {
      const std::uint64_t max_len = std::max<std::uint64_t>(1, (set.n - start) / 2);
      const std::uint64_t end = start + rng.Between(1, max_len);
      set.drifts.push_back(Drift::Gradual(start, end, current, next));
      cursor = end + 1;
    } else {
      set.drifts.push_back(Drift::Abrupt(start, current, next));
      cursor = start + 1;
    }
    current = next;
  }
  // Insertion order should not matter to any consumer.
  for (std::size_t i = set.drifts.size(); i > 1; --i) {
    std::swap(set.drifts[i - 1], set.drifts[rng.Below(i)]);
  }
  return set;
}

// Valid concept set in which every concept starts from its predecessor's
// terminal distribution.
inline ConceptSet RandomConceptSet(Rng& rng, std::uint64_t max_n = 1000,
                                   std::size_t max_concepts = 8) {
  ConceptSet set;
  set.n = rng.Between(2, max_n);
  DistPtr current = RandomDist(rng);
  std::uint64_t start = 1;
  std::size_t made = 0;
  while (start <= set.n) {
    const bool last = ++made == max_concepts;
    const std::uint64_t remaining = set.n - start + 1;
    std::uint64_t end =
        last ? set.n : start + rng.Below(std::max<std::uint64_t>(1, remaining / 2 + 1));
    end = std::min(end, set.n);
    if (end > start && rng.Bernoulli(0.5)) {
      DistPtr next = RandomDist(rng);
      set.concepts.push_back(Concept::Changing(start, end, current, next));
      current = next;
    } else {
      if (made > 1 && rng.Bernoulli(0.5)) current = RandomDist(rng);
      set.concepts.push_back(Concept::Constant(start, end, current));
    }
    start = end + 1;
  }
  return set;
}

// Keys drawn uniformly from [1, universe], or skewed towards small keys.
inline std::vector<Key> RandomKeys(Rng& rng, std::size_t n, Key universe, bool skewed) {
  std::vector<Key> keys(n);
  for (auto& k : keys) {
    if (skewed) {
      const double u = rng.Uniform();
      k = 1 + static_cast<Key>(u * u * u * static_cast<double>(universe));
      k = std::min(k, universe);
    } else {
      k = rng.Between(1, universe);
    }
  }
  return keys;
}

inline double MaxAbsDiff(const ProbDist& a, const ProbDist& b) {
  double worst = 0.0;
  for (const auto& [k, w] : a.entries()) worst = std::max(worst, std::abs(w - b.Probability(k)));
  for (const auto& [k, w] : b.entries()) worst = std::max(worst, std::abs(w - a.Probability(k)));
  return worst;
}

}  // namespace driftbench::testing
