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

#include "driftbench/samplers/landmark.h"

namespace driftbench {

Landmark::Landmark(SamplerFactory factory, std::uint64_t window)
    : factory_(std::move(factory)), window_(window) {
  if (window == 0) throw ValidationError("landmark window must be >= 1");
  if (!factory_) throw ValidationError("landmark needs an inner sampler");
  inner_ = factory_();
}

void Landmark::Record(Key key) {
  inner_->Record(key);
  if (++total_ % window_ == 0) inner_ = factory_();
}

}  // namespace driftbench
