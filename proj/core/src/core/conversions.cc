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

#include "driftbench/core/conversions.h"

#include <algorithm>
#include <numeric>

namespace driftbench {

DriftSet ConceptsToDrifts(const ConceptSet& set) {
  CheckConceptSet(set);
  std::vector<const Concept*> ordered;
  for (const auto& c : set.concepts) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(),
            [](const Concept* a, const Concept* b) { return a->start < b->start; });

  DriftSet out;
  out.n = set.n;
  DistPtr previous_terminal;
  for (const Concept* c : ordered) {
    if (const auto* changing = std::get_if<ChangingPayload>(&c->payload)) {
      out.drifts.push_back(
          Drift::Gradual(c->start, c->end, changing->from, changing->to));
    } else {
      const DistPtr& dist = std::get<ConstantPayload>(c->payload).dist;
      out.drifts.push_back(
          Drift::Abrupt(c->start, previous_terminal ? previous_terminal : dist,
                        dist));
    }
    previous_terminal = c->Terminal();
  }
  return out;
}

ConceptSet DriftsToConcepts(const DriftSet& set) {
  auto report = ValidateDriftStructure(set);
  if (!report.ok()) {
    throw ValidationError("invalid drift set:\n" + report.ToString());
  }
  std::vector<const Drift*> ordered;
  for (const auto& d : set.drifts) ordered.push_back(&d);
  std::sort(ordered.begin(), ordered.end(), [](const Drift* a, const Drift* b) {
    return a->doubled_mid < b->doubled_mid;
  });

  ConceptSet out;
  out.n = set.n;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const Drift& d = *ordered[k];
    // Last index before the next drift takes over.
    const std::uint64_t segment_end =
        k + 1 < ordered.size()
            ? static_cast<std::uint64_t>(ordered[k + 1]->start()) - 1
            : set.n;
    const auto start = static_cast<std::uint64_t>(d.start());
    const auto end = static_cast<std::uint64_t>(d.end());
    if (d.IsGradual()) {
      out.concepts.push_back(Concept::Changing(start, end, d.from, d.to));
      if (end < segment_end) {
        out.concepts.push_back(Concept::Constant(end + 1, segment_end, d.to));
      }
    } else {
      out.concepts.push_back(Concept::Constant(start, segment_end, d.to));
    }
  }
  return out;
}

}  // namespace driftbench
