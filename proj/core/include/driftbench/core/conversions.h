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

#include "driftbench/core/concept.h"
#include "driftbench/core/drift.h"

namespace driftbench {

// One drift per concept: a changing concept on [s, e] becomes a gradual drift
// of length e - s centred on (s + e) / 2; a constant concept becomes an abrupt
// drift at s whose source distribution is the predecessor's terminal
// distribution (its own distribution for the first concept).
// Throws ValidationError for an invalid concept set.
DriftSet ConceptsToDrifts(const ConceptSet& set);

// Gradual drifts become changing concepts on [start, end], followed by a
// constant concept holding `to` until the next drift starts (or n). Abrupt
// drifts become a constant concept holding `to` until the next drift.
// Throws ValidationError when the drifts break a structural rule.
ConceptSet DriftsToConcepts(const DriftSet& set);

}  // namespace driftbench
