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

#include "driftbench/core/drift.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace driftbench {

Drift Drift::Abrupt(std::uint64_t at, DistPtr from, DistPtr to) {
  return Drift{0, 2 * at, std::move(from), std::move(to)};
}

Drift Drift::Gradual(std::uint64_t start, std::uint64_t end, DistPtr from,
                     DistPtr to) {
  if (end <= start) {
    throw ValidationError("gradual drift needs end > start");
  }
  return Drift{end - start, start + end, std::move(from), std::move(to)};
}

const char* ToString(DriftRule rule) {
  switch (rule) {
    case DriftRule::kEmpty: return "empty";
    case DriftRule::kMissingDistribution: return "missing-distribution";
    case DriftRule::kParity: return "parity";
    case DriftRule::kStartBeforeOne: return "start-before-one";
    case DriftRule::kEndAfterStream: return "end-after-stream";
    case DriftRule::kOverlap: return "overlap";
    case DriftRule::kNoInitialDrift: return "no-initial-drift";
    case DriftRule::kContinuity: return "continuity";
  }
  return "unknown";
}

bool DriftValidation::Has(DriftRule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [rule](const auto& v) { return v.rule == rule; });
}

std::string DriftValidation::ToString() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << driftbench::ToString(v.rule) << " [drifts";
    for (auto d : v.drifts) out << ' ' << d;
    out << "]: " << v.detail << '\n';
  }
  return out.str();
}

namespace {

DriftValidation Validate(const DriftSet& set, bool check_continuity) {
  DriftValidation report;
  auto add = [&report](DriftRule rule, std::vector<std::size_t> drifts,
                       std::string detail) {
    report.violations.push_back({rule, std::move(drifts), std::move(detail)});
  };
  const auto& drifts = set.drifts;
  if (set.n == 0) add(DriftRule::kEmpty, {}, "stream length must be >= 1");
  if (drifts.empty()) {
    add(DriftRule::kEmpty, {}, "at least one drift is required");
    return report;
  }

  // Drifts whose start/end are meaningful for the positional rules.
  std::vector<std::size_t> placed;
  for (std::size_t i = 0; i < drifts.size(); ++i) {
    const Drift& d = drifts[i];
    if (!d.from || !d.to) {
      add(DriftRule::kMissingDistribution, {i}, "drift has no distribution");
    }
    if (!d.HasValidParity()) {
      add(DriftRule::kParity, {i},
          d.length % 2 == 0 ? "even length requires an integer midpoint"
                            : "odd length requires a half-integer midpoint");
      continue;
    }
    bool in_range = true;
    if (d.start() < 1) {
      add(DriftRule::kStartBeforeOne, {i},
          "start " + std::to_string(d.start()) + " < 1");
      in_range = false;
    }
    if (d.end() > static_cast<std::int64_t>(set.n)) {
      add(DriftRule::kEndAfterStream, {i},
          "end " + std::to_string(d.end()) + " > n = " +
              std::to_string(set.n));
      in_range = false;
    }
    if (in_range) placed.push_back(i);
  }

  for (std::size_t a = 0; a < placed.size(); ++a) {
    for (std::size_t b = a + 1; b < placed.size(); ++b) {
      const Drift& d1 = drifts[placed[a]];
      const Drift& d2 = drifts[placed[b]];
      const Drift& first = d1.end() <= d2.end() ? d1 : d2;
      const Drift& second = d1.end() <= d2.end() ? d2 : d1;
      if (!(first.end() < second.start())) {
        add(DriftRule::kOverlap, {placed[a], placed[b]},
            "drift ranges intersect");
      }
    }
  }

  bool has_initial = std::any_of(drifts.begin(), drifts.end(), [](const auto& d) {
    return d.HasValidParity() && d.start() == 1;
  });
  if (!has_initial) {
    add(DriftRule::kNoInitialDrift, {}, "no drift starts at index 1");
  }

  if (check_continuity) {
    std::vector<std::size_t> by_mid(drifts.size());
    std::iota(by_mid.begin(), by_mid.end(), std::size_t{0});
    std::stable_sort(by_mid.begin(), by_mid.end(), [&](auto x, auto y) {
      return drifts[x].doubled_mid < drifts[y].doubled_mid;
    });
    for (std::size_t k = 0; k + 1 < by_mid.size(); ++k) {
      const Drift& cur = drifts[by_mid[k]];
      const Drift& next = drifts[by_mid[k + 1]];
      if (next.doubled_mid == cur.doubled_mid) continue;  // overlap handles it
      if (cur.to && next.from && !SameDistribution(cur.to, next.from)) {
        add(DriftRule::kContinuity, {by_mid[k], by_mid[k + 1]},
            "target of a drift differs from the source of the next drift");
      }
    }
  }
  return report;
}

}  // namespace

DriftValidation ValidateDriftSet(const DriftSet& set) {
  return Validate(set, /*check_continuity=*/true);
}

DriftValidation ValidateDriftStructure(const DriftSet& set) {
  return Validate(set, /*check_continuity=*/false);
}

DriftTimeline::DriftTimeline(DriftSet set) : set_(std::move(set)) {
  auto report = ValidateDriftStructure(set_);
  if (!report.ok()) throw ValidationError("invalid drift set:\n" + report.ToString());
  order_.resize(set_.drifts.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(), [this](auto a, auto b) {
    return set_.drifts[a].start() < set_.drifts[b].start();
  });
  starts_.reserve(order_.size());
  for (auto idx : order_) starts_.push_back(set_.drifts[idx].start());
}

GoverningDrift DriftTimeline::Locate(std::uint64_t i) const {
  if (i < 1 || i > set_.n) {
    throw std::out_of_range("stream index " + std::to_string(i) +
                            " outside [1, " + std::to_string(set_.n) + "]");
  }
  // Last drift starting at or before i; the initial drift guarantees one.
  auto it = std::upper_bound(starts_.begin(), starts_.end(),
                             static_cast<std::int64_t>(i));
  const std::size_t pos = static_cast<std::size_t>(it - starts_.begin()) - 1;
  const std::size_t idx = order_[pos];
  const Drift& d = set_.drifts[idx];
  const auto index = static_cast<std::int64_t>(i);
  if (d.IsGradual() && index <= d.end()) {
    return {GenerationRule::kInsideGradual, idx};
  }
  if (!d.IsGradual() && index == d.start()) {
    return {GenerationRule::kAtAbrupt, idx};
  }
  return {GenerationRule::kAfterDriftEnd, idx};
}

double DriftTimeline::Progress(const Drift& drift, std::uint64_t i) {
  return static_cast<double>(static_cast<std::int64_t>(i) - drift.start()) /
         static_cast<double>(drift.length);
}

}  // namespace driftbench
