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
#include <optional>
#include <string>
#include <vector>

namespace driftbench {

// Long-format per-batch measurements.
class BenchmarkSeries {
 public:
  struct Row {
    std::uint64_t batch_index;
    std::string algorithm;
    std::string metric;
    double value;
  };

  struct Summary {
    double mean = 0.0;
    double max = 0.0;
    std::size_t batches = 0;
  };

  void Add(std::uint64_t batch_index, std::string algorithm, std::string metric,
           double value);
  const std::vector<Row>& rows() const { return rows_; }

  // Algorithms in first-appearance order.
  std::vector<std::string> Algorithms() const;
  // Values of one (algorithm, metric) pair in batch order.
  std::vector<double> Values(const std::string& algorithm,
                             const std::string& metric) const;
  Summary Summarize(const std::string& algorithm, const std::string& metric) const;

 private:
  std::vector<Row> rows_;
};

// Batches needed after a drift to get back near the pre-drift level.
//
// The baseline is the mean of values[0, baseline_batches). Counting starts at
// values[first_post_batch]; the result is the number of batches stepped past
// it until a value is <= factor * baseline, or nullopt if that never happens.
std::optional<std::size_t> RecoveryBatches(const std::vector<double>& values,
                                           std::size_t baseline_batches,
                                           std::size_t first_post_batch,
                                           double factor);

}  // namespace driftbench
