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
#include <functional>
#include <vector>

#include "driftbench/optimizer/param_space.h"

namespace driftbench {

struct Individual {
  Config config;
  double fitness = 0.0;  // lower is better
};

struct GenerationRecord {
  std::size_t generation = 0;      // 1-based
  std::vector<Individual> population;  // sorted by fitness
  Individual best;                 // best seen so far
};

struct OptimizeOptions {
  std::size_t generations = 10;
  std::size_t survivors = 2;
  std::size_t children_per_survivor = 4;
  std::uint64_t seed = 0;
};

struct OptimizeResult {
  Individual best;
  std::vector<GenerationRecord> history;
  std::size_t evaluations = 0;  // distinct configs benchmarked
};

using FitnessFunction = std::function<double(const Config&)>;

// Population-based local minimum search. Each generation benchmarks the
// population, keeps the best `survivors` (ties by canonical config), adds
// their lattice neighbours and carries the survivors over. Fitness values
// are cached per config. Deterministic for a given seed.
// Throws ValidationError for an empty initial population, generations == 0,
// survivors == 0 or children_per_survivor == 0.
OptimizeResult Optimize(const ParamSpace& space, std::vector<Config> initial,
                        const FitnessFunction& fitness,
                        const OptimizeOptions& options);

}  // namespace driftbench
