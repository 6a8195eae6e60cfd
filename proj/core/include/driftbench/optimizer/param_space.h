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
#include <map>
#include <string>
#include <vector>

#include "driftbench/generator/rng.h"

namespace driftbench {

// Parameter name to value. Integer parameters hold whole numbers.
using Config = std::map<std::string, double>;

enum class ParamKind { kInteger, kReal };
enum class ParamScale { kLinear, kLog };

// One tunable parameter. Linear parameters move by +-step; logarithmic ones
// are multiplied or divided by step (> 1).
struct ParamDef {
  std::string name;  // dotted paths such as "inner.epsilon" are allowed
  ParamKind kind = ParamKind::kReal;
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;
  ParamScale scale = ParamScale::kLinear;
  bool probability = false;  // range is clamped into [0, 1]
  bool window = false;       // max is clamped to the shortest stream length
};

class ParamSpace {
 public:
  // Throws ValidationError for empty or duplicate names, min > max,
  // step <= 0, a log step <= 1 or a log range touching zero.
  explicit ParamSpace(std::vector<ParamDef> params);

  const std::vector<ParamDef>& params() const { return params_; }

  // Caps window parameters at `length`.
  void BoundWindows(std::uint64_t length);

  // Rounds integers and clamps into range. Throws ValidationError when a
  // parameter is missing or unknown.
  Config Snap(const Config& config) const;

  // True when every parameter has min == max.
  bool Degenerate() const;

 private:
  std::vector<ParamDef> params_;
};

// Stable text form used for caching and tie-breaking.
std::string CanonicalConfig(const Config& config);

// Distinct lattice neighbours of `config`: every parameter independently
// moves one step down, stays or moves one step up (clamped), excluding the
// unchanged config. Returns at most `count` of them in random order. When
// the neighbourhood has at most 10000 candidates it is enumerated, otherwise
// it is sampled. Throws ValidationError when count == 0.
std::vector<Config> Neighbors(const Config& config, const ParamSpace& space,
                              std::size_t count, Rng& rng);

}  // namespace driftbench
