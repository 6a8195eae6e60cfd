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

#include "driftbench/samplers/sampler.h"

namespace driftbench {

Estimate Sampler::Query(TopK top) const {
  Estimate all = Snapshot();
  return SelectTopK(std::move(all.counts), all.total, top);
}

Estimate Sampler::Query(Threshold threshold) const {
  Estimate all = Snapshot();
  return SelectThreshold(std::move(all.counts), all.total, threshold);
}

std::optional<ProbDist> Sampler::RelativeFrequencies() const {
  return Snapshot().RelativeFrequencies();
}

}  // namespace driftbench
