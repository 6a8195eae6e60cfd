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

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "driftbench/core/types.h"

namespace driftbench {

// Discrete probability distribution over integer keys.
//
// Entries are kept sorted by key and only strictly positive weights are
// stored; every other key has implicit probability 0. Instances are
// immutable once built.
class ProbDist {
 public:
  using Entry = std::pair<Key, double>;

  // Allowed deviation of the weight sum from 1.
  static constexpr double kSumTolerance = 1e-9;

  // Builds a distribution from explicit weights. Duplicate keys are summed
  // and zero weights dropped. Throws ValidationError when a weight is
  // negative or not finite, or when the sum is not 1 within kSumTolerance.
  static ProbDist FromWeights(std::vector<Entry> weights);

  // Scales non-negative masses so they sum to 1. Throws ValidationError when
  // the total mass is zero.
  static ProbDist Normalize(std::vector<Entry> masses);

  static ProbDist PointMass(Key key);

  // (1 - q) * from + q * to, with q in [0, 1].
  static ProbDist Mixture(const ProbDist& from, const ProbDist& to, double q);

  double Probability(Key key) const;
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double MinPositive() const;
  double Sum() const;

  // Exact key-set and weight equality.
  friend bool operator==(const ProbDist&, const ProbDist&) = default;

 private:
  explicit ProbDist(std::vector<Entry> sorted) : entries_(std::move(sorted)) {}

  std::vector<Entry> entries_;
};

// Distributions are shared between drifts, concepts and metadata.
using DistPtr = std::shared_ptr<const ProbDist>;

inline DistPtr Share(ProbDist dist) {
  return std::make_shared<const ProbDist>(std::move(dist));
}

// Same object, or exactly equal contents.
inline bool SameDistribution(const DistPtr& a, const DistPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace driftbench
