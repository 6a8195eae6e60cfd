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
#include <variant>
#include <vector>

#include "driftbench/core/prob_dist.h"

namespace driftbench {

struct ConstantPayload {
  DistPtr dist;
};

struct ChangingPayload {
  DistPtr from;
  DistPtr to;
};

// A distribution regime active on the closed index range [start, end].
struct Concept {
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  std::variant<ConstantPayload, ChangingPayload> payload;

  static Concept Constant(std::uint64_t start, std::uint64_t end, DistPtr dist);
  static Concept Changing(std::uint64_t start, std::uint64_t end, DistPtr from,
                          DistPtr to);

  bool IsChanging() const {
    return std::holds_alternative<ChangingPayload>(payload);
  }
  // Distribution at the first / last index of the concept.
  const DistPtr& Initial() const;
  const DistPtr& Terminal() const;
};

struct ConceptSet {
  std::vector<Concept> concepts;
  std::uint64_t n = 0;
};

// Throws ValidationError unless exactly one concept is active at every index
// 1..n and every concept is well formed.
void CheckConceptSet(const ConceptSet& set);
bool IsValidConceptSet(const ConceptSet& set);

// Expected distribution at index i: a constant concept's distribution, or the
// mixture (1 - q) * from + q * to with q = (i - start) / (end - start).
// Throws std::out_of_range unless 1 <= i <= n.
ProbDist TrueDistribution(const ConceptSet& set, std::uint64_t i);

}  // namespace driftbench
