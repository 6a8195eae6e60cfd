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
#include <vector>

#include "driftbench/core/prob_dist.h"

namespace driftbench {

// Generator-side description of a transition between two distributions.
//
// The midpoint may be a half-integer, so it is stored doubled. With valid
// parity (doubled_mid and length share parity) start() and end() are
// integers. length == 0 is an abrupt drift.
struct Drift {
  std::uint64_t length = 0;
  std::uint64_t doubled_mid = 0;
  DistPtr from;
  DistPtr to;

  static Drift Abrupt(std::uint64_t at, DistPtr from, DistPtr to);
  // Gradual drift covering [start, end]; requires end > start.
  static Drift Gradual(std::uint64_t start, std::uint64_t end, DistPtr from,
                       DistPtr to);

  bool IsGradual() const { return length > 0; }
  bool HasValidParity() const { return doubled_mid % 2 == length % 2; }

  // Signed so that an invalid start below 1 is representable. Only exact
  // when the parity is valid.
  std::int64_t start() const {
    return (static_cast<std::int64_t>(doubled_mid) -
            static_cast<std::int64_t>(length)) / 2;
  }
  std::int64_t end() const {
    return static_cast<std::int64_t>((doubled_mid + length) / 2);
  }
};

struct DriftSet {
  std::vector<Drift> drifts;
  std::uint64_t n = 0;  // stream length
};

enum class DriftRule {
  kEmpty,                // no drifts, or n == 0
  kMissingDistribution,  // a drift without from/to
  kParity,
  kStartBeforeOne,
  kEndAfterStream,
  kOverlap,
  kNoInitialDrift,
  kContinuity,
};

const char* ToString(DriftRule rule);

struct DriftViolation {
  DriftRule rule;
  std::vector<std::size_t> drifts;  // indices into DriftSet::drifts
  std::string detail;
};

struct DriftValidation {
  std::vector<DriftViolation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(DriftRule rule) const;
  std::string ToString() const;
};

// Checks every drift-set rule. Violations are reported, never thrown.
DriftValidation ValidateDriftSet(const DriftSet& set);

// Same checks without the continuity rule; this is what the drift/concept
// equivalence needs.
DriftValidation ValidateDriftStructure(const DriftSet& set);

// Which generation rule governs a stream index.
enum class GenerationRule {
  kInsideGradual,   // rule 1: interpolate between from and to
  kAtAbrupt,        // rule 2: index is an abrupt drift point
  kAfterDriftEnd,   // rule 3: the last ended drift's target distribution
};

struct GoverningDrift {
  GenerationRule rule;
  std::size_t drift;  // index into the original DriftSet::drifts
};

// Answers "which drift governs index i" by binary search over drift starts.
// Requires a structurally valid set.
class DriftTimeline {
 public:
  explicit DriftTimeline(DriftSet set);

  const DriftSet& set() const { return set_; }
  std::uint64_t n() const { return set_.n; }

  // Throws std::out_of_range unless 1 <= i <= n.
  GoverningDrift Locate(std::uint64_t i) const;

  // Progress inside a gradual drift, (i - start) / length.
  static double Progress(const Drift& drift, std::uint64_t i);

  // Drift indices ordered by start.
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  DriftSet set_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> starts_;
};

}  // namespace driftbench
