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

#include "driftbench/ranking/partitioning.h"

#include <algorithm>
#include <cstdlib>

#include "driftbench/metrics/imbalance.h"
#include "driftbench/ranking/sampler_spec.h"

namespace driftbench {

std::size_t HashPartition(Key key, std::size_t m) {
  if (m == 0) throw ValidationError("partition count must be >= 1");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (int byte = 0; byte < 8; ++byte) {
    hash ^= (key >> (8 * byte)) & 0xffU;
    hash *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(hash % m);
}

Partitioning::Partitioning(std::size_t m) : m_(m) {
  if (m == 0) throw ValidationError("partition count must be >= 1");
}

Partitioning::Partitioning(std::size_t m,
                           std::unordered_map<Key, std::size_t> explicit_map)
    : Partitioning(m) {
  for (const auto& [key, target] : explicit_map) {
    if (target >= m) throw ValidationError("explicit partition target out of range");
  }
  explicit_ = std::move(explicit_map);
}

std::vector<std::pair<Key, double>> AggregateFrequencies(const Estimate& aggregate) {
  double denom = static_cast<double>(aggregate.total);
  if (denom <= 0.0) denom = aggregate.SumOfCounts();
  std::vector<std::pair<Key, double>> out;
  if (denom <= 0.0) return out;
  out.reserve(aggregate.counts.size());
  for (const auto& [key, count] : aggregate.counts) {
    if (count > 0.0) out.emplace_back(key, count / denom);
  }
  return out;
}

namespace {

double Residual(const std::vector<std::pair<Key, double>>& freqs) {
  double covered = 0.0;
  for (const auto& f : freqs) covered += f.second;
  return std::max(0.0, 1.0 - covered);
}

}  // namespace

std::vector<double> ProjectedLoads(const Partitioning& partitioning,
                                   const Estimate& aggregate) {
  const auto freqs = AggregateFrequencies(aggregate);
  const std::size_t m = partitioning.partitions();
  std::vector<double> loads(m, Residual(freqs) / static_cast<double>(m));
  for (const auto& [key, f] : freqs) loads[partitioning.Route(key)] += f;
  return loads;
}

Partitioning GreedyLpt::Build(const Estimate& aggregate, std::size_t m) const {
  auto freqs = AggregateFrequencies(aggregate);
  if (freqs.empty()) return Partitioning(m);
  std::sort(freqs.begin(), freqs.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<double> loads(m, Residual(freqs) / static_cast<double>(m));
  std::unordered_map<Key, std::size_t> placement;
  placement.reserve(freqs.size());
  for (const auto& [key, f] : freqs) {
    const std::size_t target = static_cast<std::size_t>(
        std::min_element(loads.begin(), loads.end()) - loads.begin());
    loads[target] += f;
    placement.emplace(key, target);
  }
  return Partitioning(m, std::move(placement));
}

ImbalanceThresholdDecider::ImbalanceThresholdDecider(double theta) : theta_(theta) {
  if (!(theta >= 0.0)) throw ValidationError("decider theta must be >= 0");
}

bool ImbalanceThresholdDecider::ShouldRepartition(const Partitioning& current,
                                                  const Estimate& aggregate) const {
  const auto loads = ProjectedLoads(current, aggregate);
  double sum = 0.0;
  for (double l : loads) sum += l;
  if (sum <= 0.0) return false;
  return PercentImbalance(loads) > theta_;
}

std::string ImbalanceThresholdDecider::Spec() const {
  return "imbalance_threshold:" + FormatDouble(theta_);
}

std::shared_ptr<const Decider> MakeDecider(const std::string& spec) {
  if (spec == "always") return std::make_shared<AlwaysDecider>();
  if (spec == "never") return std::make_shared<NeverDecider>();
  const std::string prefix = "imbalance_threshold";
  if (spec == prefix) return std::make_shared<ImbalanceThresholdDecider>();
  if (spec.rfind(prefix + ":", 0) == 0) {
    const std::string value = spec.substr(prefix.size() + 1);
    char* end = nullptr;
    const double theta = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') {
      throw ValidationError("bad decider threshold: " + value);
    }
    return std::make_shared<ImbalanceThresholdDecider>(theta);
  }
  throw ValidationError("unknown decider: " + spec);
}

std::shared_ptr<const Repartitioner> MakeRepartitioner(const std::string& spec) {
  if (spec == "greedy_lpt") return std::make_shared<GreedyLpt>();
  throw ValidationError("unknown repartitioner: " + spec);
}

}  // namespace driftbench
