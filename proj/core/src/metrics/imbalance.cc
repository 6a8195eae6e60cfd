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

#include "driftbench/metrics/imbalance.h"

#include <algorithm>

#include "driftbench/core/types.h"

namespace driftbench {

double PercentImbalance(std::span<const double> loads) {
  if (loads.empty()) throw ValidationError("imbalance needs at least one load");
  double sum = 0.0;
  double max = 0.0;
  for (double l : loads) {
    if (!(l >= 0.0)) throw ValidationError("loads must be non-negative");
    sum += l;
    max = std::max(max, l);
  }
  if (sum <= 0.0) throw ValidationError("imbalance is undefined for zero load");
  const double mean = sum / static_cast<double>(loads.size());
  const double value = (max / mean - 1.0) * 100.0;
  return value < 0.0 ? 0.0 : value;
}

}  // namespace driftbench
