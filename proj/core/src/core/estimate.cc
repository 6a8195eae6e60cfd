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

#include "driftbench/core/estimate.h"

#include <algorithm>

namespace driftbench {
namespace {

void SortByKey(std::vector<Estimate::Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

double Estimate::CountOf(Key key) const {
  auto it = std::lower_bound(
      counts.begin(), counts.end(), key,
      [](const Entry& e, Key k) { return e.first < k; });
  return (it != counts.end() && it->first == key) ? it->second : 0.0;
}

double Estimate::SumOfCounts() const {
  double sum = 0.0;
  for (const auto& e : counts) sum += e.second;
  return sum;
}

std::optional<ProbDist> Estimate::RelativeFrequencies() const {
  if (SumOfCounts() <= 0.0) return std::nullopt;
  return ProbDist::Normalize(counts);
}

Estimate SelectTopK(std::vector<Estimate::Entry> counters, std::uint64_t total,
                    TopK top) {
  if (top.k == 0) throw ValidationError("top-K requires K >= 1");
  std::erase_if(counters, [](const auto& e) { return e.second <= 0.0; });
  if (counters.size() > top.k) {
    auto by_count = [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    };
    std::nth_element(counters.begin(), counters.begin() + top.k,
                     counters.end(), by_count);
    counters.resize(top.k);
  }
  SortByKey(counters);
  return Estimate{std::move(counters), total};
}

Estimate SelectThreshold(std::vector<Estimate::Entry> counters,
                         std::uint64_t total, Threshold threshold) {
  if (!(threshold.phi >= 0.0 && threshold.phi <= 1.0)) {
    throw ValidationError("threshold phi must lie in [0, 1]");
  }
  const double cut = threshold.phi * static_cast<double>(total);
  std::erase_if(counters, [cut](const auto& e) {
    return e.second <= 0.0 || e.second < cut;
  });
  SortByKey(counters);
  return Estimate{std::move(counters), total};
}

Estimate SelectAll(std::vector<Estimate::Entry> counters, std::uint64_t total) {
  std::erase_if(counters, [](const auto& e) { return e.second <= 0.0; });
  SortByKey(counters);
  return Estimate{std::move(counters), total};
}

}  // namespace driftbench
