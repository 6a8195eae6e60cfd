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

#include "driftbench/adaptive/temporal_smoothed.h"

namespace driftbench {

TemporalSmoothed::TemporalSmoothed(SamplerFactory factory,
                                   std::uint64_t threshold,
                                   std::uint64_t switch_threshold)
    : factory_(std::move(factory)),
      threshold_(threshold),
      switch_threshold_(switch_threshold) {
  if (threshold == 0 || switch_threshold == 0) {
    throw ValidationError("temporal smoothed thresholds must be >= 1");
  }
  if (!factory_) throw ValidationError("temporal smoothed needs an inner sampler");
  main_ = factory_();
}

void TemporalSmoothed::Record(Key key) {
  ++total_;
  main_->Record(key);
  if (secondary_) secondary_->Record(key);
  if (!secondary_ && main_->TotalProcessed() == threshold_ + switch_threshold_) {
    secondary_ = factory_();
  } else if (secondary_ && secondary_->TotalProcessed() == switch_threshold_) {
    main_ = std::move(secondary_);
    ++promotions_;
  }
}

std::size_t TemporalSmoothed::CounterCount() const {
  return main_->CounterCount() + (secondary_ ? secondary_->CounterCount() : 0);
}

}  // namespace driftbench
