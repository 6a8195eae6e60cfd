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

#include "driftbench/core/concept.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace driftbench {

Concept Concept::Constant(std::uint64_t start, std::uint64_t end,
                          DistPtr dist) {
  return Concept{start, end, ConstantPayload{std::move(dist)}};
}

Concept Concept::Changing(std::uint64_t start, std::uint64_t end, DistPtr from,
                          DistPtr to) {
  return Concept{start, end, ChangingPayload{std::move(from), std::move(to)}};
}

const DistPtr& Concept::Initial() const {
  if (const auto* c = std::get_if<ConstantPayload>(&payload)) return c->dist;
  return std::get<ChangingPayload>(payload).from;
}

const DistPtr& Concept::Terminal() const {
  if (const auto* c = std::get_if<ConstantPayload>(&payload)) return c->dist;
  return std::get<ChangingPayload>(payload).to;
}

void CheckConceptSet(const ConceptSet& set) {
  if (set.n == 0) throw ValidationError("concept set needs n >= 1");
  if (set.concepts.empty()) throw ValidationError("concept set is empty");
  std::vector<std::size_t> order(set.concepts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return set.concepts[a].start < set.concepts[b].start;
  });
  std::uint64_t expected_start = 1;
  for (auto idx : order) {
    const Concept& c = set.concepts[idx];
    const std::string where = "concept " + std::to_string(idx);
    if (c.start < 1 || c.start > c.end) {
      throw ValidationError(where + ": needs 1 <= start <= end");
    }
    if (c.IsChanging() && c.end <= c.start) {
      throw ValidationError(where + ": a changing concept needs end > start");
    }
    if (!c.Initial() || !c.Terminal()) {
      throw ValidationError(where + ": missing distribution");
    }
    if (c.start != expected_start) {
      throw ValidationError(
          where + (c.start < expected_start ? ": overlaps its predecessor"
                                            : ": leaves a gap before it"));
    }
    expected_start = c.end + 1;
  }
  if (expected_start != set.n + 1) {
    throw ValidationError("concepts must cover exactly 1.." +
                          std::to_string(set.n));
  }
}

bool IsValidConceptSet(const ConceptSet& set) {
  try {
    CheckConceptSet(set);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

ProbDist TrueDistribution(const ConceptSet& set, std::uint64_t i) {
  if (i < 1 || i > set.n) {
    throw std::out_of_range("stream index " + std::to_string(i) +
                            " outside [1, " + std::to_string(set.n) + "]");
  }
  auto it = std::find_if(set.concepts.begin(), set.concepts.end(),
                         [i](const Concept& c) {
                           return c.start <= i && i <= c.end;
                         });
  if (it == set.concepts.end()) {
    throw ValidationError("no concept active at index " + std::to_string(i));
  }
  if (const auto* c = std::get_if<ConstantPayload>(&it->payload)) {
    return *c->dist;
  }
  const auto& changing = std::get<ChangingPayload>(it->payload);
  const double q = static_cast<double>(i - it->start) /
                   static_cast<double>(it->end - it->start);
  return ProbDist::Mixture(*changing.from, *changing.to, q);
}

}  // namespace driftbench
