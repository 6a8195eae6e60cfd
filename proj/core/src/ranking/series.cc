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

#include "driftbench/ranking/series.h"

#include <algorithm>

namespace driftbench {

void BenchmarkSeries::Add(std::uint64_t batch_index, std::string algorithm,
                          std::string metric, double value) {
  rows_.push_back(Row{batch_index, std::move(algorithm), std::move(metric), value});
}

std::vector<std::string> BenchmarkSeries::Algorithms() const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    if (std::find(out.begin(), out.end(), row.algorithm) == out.end()) {
      out.push_back(row.algorithm);
    }
  }
  return out;
}

std::vector<double> BenchmarkSeries::Values(const std::string& algorithm,
                                            const std::string& metric) const {
  std::vector<std::pair<std::uint64_t, double>> picked;
  for (const auto& row : rows_) {
    if (row.algorithm == algorithm && row.metric == metric) {
      picked.emplace_back(row.batch_index, row.value);
    }
  }
  std::stable_sort(picked.begin(), picked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> out;
  out.reserve(picked.size());
  for (const auto& p : picked) out.push_back(p.second);
  return out;
}

BenchmarkSeries::Summary BenchmarkSeries::Summarize(const std::string& algorithm,
                                                    const std::string& metric) const {
  Summary s;
  const auto values = Values(algorithm, metric);
  if (values.empty()) return s;
  double sum = 0.0;
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.max = std::max(s.max, v);
  }
  s.batches = values.size();
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

std::optional<std::size_t> RecoveryBatches(const std::vector<double>& values,
                                           std::size_t baseline_batches,
                                           std::size_t first_post_batch,
                                           double factor) {
  if (baseline_batches == 0 || baseline_batches > values.size()) return std::nullopt;
  double baseline = 0.0;
  for (std::size_t i = 0; i < baseline_batches; ++i) baseline += values[i];
  baseline /= static_cast<double>(baseline_batches);
  for (std::size_t i = first_post_batch; i < values.size(); ++i) {
    if (values[i] <= factor * baseline) return i - first_post_batch;
  }
  return std::nullopt;
}

}  // namespace driftbench
