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

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "driftbench/core/estimate.h"

namespace driftbench {

// FNV-1a 64 over the key's 8 little-endian bytes, modulo m. Throws
// ValidationError when m == 0.
std::size_t HashPartition(Key key, std::size_t m);

// Key-to-partition map: explicitly placed keys first, hash rule otherwise.
class Partitioning {
 public:
  // Pure hash partitioning over m partitions.
  explicit Partitioning(std::size_t m);
  // Throws ValidationError when a target is outside [0, m).
  Partitioning(std::size_t m, std::unordered_map<Key, std::size_t> explicit_map);

  std::size_t Route(Key key) const {
    if (!explicit_.empty()) {
      if (auto it = explicit_.find(key); it != explicit_.end()) return it->second;
    }
    return HashPartition(key, m_);
  }
  std::size_t partitions() const { return m_; }
  const std::unordered_map<Key, std::size_t>& explicit_map() const { return explicit_; }

 private:
  std::size_t m_;
  std::unordered_map<Key, std::size_t> explicit_;
};

// Estimated relative frequency of each aggregate key: count / total, or
// count / sum of counts when total is zero.
std::vector<std::pair<Key, double>> AggregateFrequencies(const Estimate& aggregate);

// Expected per-partition load shares of `aggregate` under `partitioning`.
// The mass not covered by the aggregate is spread evenly.
std::vector<double> ProjectedLoads(const Partitioning& partitioning,
                                   const Estimate& aggregate);

// Builds a new partitioning from aggregated sampler estimates.
class Repartitioner {
 public:
  virtual ~Repartitioner() = default;
  virtual Partitioning Build(const Estimate& aggregate, std::size_t m) const = 0;
  virtual std::string Spec() const = 0;
};

// Greedy longest-processing-time placement. Keys in descending frequency
// (ties towards the smaller key) go to the least-loaded partition (ties
// towards the lower index); partitions start with the uncovered mass / m.
class GreedyLpt : public Repartitioner {
 public:
  Partitioning Build(const Estimate& aggregate, std::size_t m) const override;
  std::string Spec() const override { return "greedy_lpt"; }
};

// Decides at a batch boundary whether a new partitioning is installed.
class Decider {
 public:
  virtual ~Decider() = default;
  virtual bool ShouldRepartition(const Partitioning& current,
                                 const Estimate& aggregate) const = 0;
  virtual std::string Spec() const = 0;
};

class AlwaysDecider : public Decider {
 public:
  bool ShouldRepartition(const Partitioning&, const Estimate&) const override {
    return true;
  }
  std::string Spec() const override { return "always"; }
};

class NeverDecider : public Decider {
 public:
  bool ShouldRepartition(const Partitioning&, const Estimate&) const override {
    return false;
  }
  std::string Spec() const override { return "never"; }
};

// Fires when the projected percent imbalance of the current partitioning
// under the aggregate exceeds theta.
class ImbalanceThresholdDecider : public Decider {
 public:
  // Throws ValidationError when theta < 0.
  explicit ImbalanceThresholdDecider(double theta = 10.0);
  bool ShouldRepartition(const Partitioning& current,
                         const Estimate& aggregate) const override;
  std::string Spec() const override;

 private:
  double theta_;
};

// Parses "always", "never", "imbalance_threshold" or
// "imbalance_threshold:<theta>".
std::shared_ptr<const Decider> MakeDecider(const std::string& spec);
// Parses "greedy_lpt".
std::shared_ptr<const Repartitioner> MakeRepartitioner(const std::string& spec);

}  // namespace driftbench
