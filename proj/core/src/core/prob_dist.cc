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

#include "driftbench/core/prob_dist.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace driftbench {
namespace {

// Sorts by key, merges duplicates and drops zero weights.
std::vector<ProbDist::Entry> Canonicalize(std::vector<ProbDist::Entry> in) {
  for (const auto& [key, weight] : in) {
    if (!std::isfinite(weight) || weight < 0.0) {
      throw ValidationError("weight for key " + std::to_string(key) +
                            " must be finite and non-negative");
    }
  }
  std::sort(in.begin(), in.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ProbDist::Entry> out;
  out.reserve(in.size());
  for (const auto& [key, weight] : in) {
    if (!out.empty() && out.back().first == key) {
      out.back().second += weight;
    } else {
      out.emplace_back(key, weight);
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0.0; });
  return out;
}

double SumOf(const std::vector<ProbDist::Entry>& entries) {
  double sum = 0.0;
  for (const auto& e : entries) sum += e.second;
  return sum;
}

}  // namespace

ProbDist ProbDist::FromWeights(std::vector<Entry> weights) {
  auto entries = Canonicalize(std::move(weights));
  const double sum = SumOf(entries);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("distribution weights sum to " +
                          std::to_string(sum) + ", expected 1");
  }
  return ProbDist(std::move(entries));
}

ProbDist ProbDist::Normalize(std::vector<Entry> masses) {
  auto entries = Canonicalize(std::move(masses));
  const double sum = SumOf(entries);
  if (sum <= 0.0) throw ValidationError("cannot normalise zero total mass");
  for (auto& e : entries) e.second /= sum;
  return ProbDist(std::move(entries));
}

ProbDist ProbDist::PointMass(Key key) { return ProbDist({{key, 1.0}}); }

ProbDist ProbDist::Mixture(const ProbDist& from, const ProbDist& to,
                           double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("mixture weight must lie in [0, 1]");
  }
  const double keep = 1.0 - q;
  std::vector<Entry> out;
  out.reserve(from.size() + to.size());
  auto a = from.entries_.begin();
  auto b = to.entries_.begin();
  while (a != from.entries_.end() || b != to.entries_.end()) {
    if (b == to.entries_.end() ||
        (a != from.entries_.end() && a->first < b->first)) {
      out.emplace_back(a->first, keep * a->second);
      ++a;
    } else if (a == from.entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, q * b->second);
      ++b;
    } else {
      out.emplace_back(a->first, keep * a->second + q * b->second);
      ++a;
      ++b;
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0.0; });
  return ProbDist(std::move(out));
}

double ProbDist::Probability(Key key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, Key k) { return e.first < k; });
  return (it != entries_.end() && it->first == key) ? it->second : 0.0;
}

double ProbDist::MinPositive() const {
  double best = 1.0;
  for (const auto& e : entries_) best = std::min(best, e.second);
  return best;
}

double ProbDist::Sum() const { return SumOf(entries_); }

}  // namespace driftbench
