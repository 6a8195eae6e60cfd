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

#include "driftbench/adaptive/checkpoint_smoothed.h"

#include "driftbench/metrics/distance.h"

namespace driftbench {

CheckpointSmoothed::CheckpointSmoothed(SamplerFactory factory,
                                       std::uint64_t checkpoint_window,
                                       std::uint64_t check_threshold,
                                       double error_threshold)
    : factory_(std::move(factory)),
      checkpoint_window_(checkpoint_window),
      check_threshold_(check_threshold),
      error_threshold_(error_threshold) {
  if (checkpoint_window == 0 || check_threshold == 0) {
    throw ValidationError("checkpoint smoothed windows must be >= 1");
  }
  if (!(error_threshold > 0.0)) {
    throw ValidationError("checkpoint smoothed error threshold must be > 0");
  }
  if (!factory_) throw ValidationError("checkpoint smoothed needs an inner sampler");
  main_ = factory_();
}

void CheckpointSmoothed::Record(Key key) {
  ++total_;
  main_->Record(key);
  if (secondary_) secondary_->Record(key);
  if (!secondary_ && total_ > checkpoint_ + checkpoint_window_) {
    secondary_ = factory_();
  } else if (secondary_ && secondary_->TotalProcessed() > check_threshold_) {
    last_distance_ = HellingerOrSaturate(main_->RelativeFrequencies(),
                                         secondary_->RelativeFrequencies());
    ++checks_;
    if (last_distance_ > error_threshold_) {
      main_ = std::move(secondary_);
      ++replacements_;
    }
    secondary_.reset();
    checkpoint_ = total_;
  }
}

std::size_t CheckpointSmoothed::CounterCount() const {
  return main_->CounterCount() + (secondary_ ? secondary_->CounterCount() : 0);
}

}  // namespace driftbench
