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

#include "driftbench/optimizer/optimizer.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "driftbench/core/types.h"

namespace driftbench {

OptimizeResult Optimize(const ParamSpace& space, std::vector<Config> initial,
                        const FitnessFunction& fitness,
                        const OptimizeOptions& options) {
  if (initial.empty()) throw ValidationError("initial population is empty");
  if (options.generations == 0) throw ValidationError("generations must be >= 1");
  if (options.survivors == 0) throw ValidationError("survivors must be >= 1");
  if (options.children_per_survivor == 0) {
    throw ValidationError("children per survivor must be >= 1");
  }
  if (!fitness) throw ValidationError("no fitness function");

  Rng rng(options.seed);
  std::unordered_map<std::string, double> cache;
  OptimizeResult result;
  bool have_best = false;

  auto evaluate = [&](const Config& c) {
    const std::string key = CanonicalConfig(c);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fitness(c)).first;
    return it->second;
  };
  auto better = [](const Individual& a, const Individual& b) {
    if (a.fitness != b.fitness) return a.fitness < b.fitness;
    return CanonicalConfig(a.config) < CanonicalConfig(b.config);
  };

  // Deduplicated, lattice-snapped population.
  std::vector<Config> population;
  std::set<std::string> members;
  auto admit = [&](const Config& c) {
    Config snapped = space.Snap(c);
    if (members.insert(CanonicalConfig(snapped)).second) {
      population.push_back(std::move(snapped));
    }
  };
  for (const auto& c : initial) admit(c);

  for (std::size_t g = 1; g <= options.generations; ++g) {
    GenerationRecord record;
    record.generation = g;
    for (const auto& c : population) record.population.push_back({c, evaluate(c)});
    std::sort(record.population.begin(), record.population.end(), better);
    if (!have_best || better(record.population.front(), result.best)) {
      result.best = record.population.front();
      have_best = true;
    }
    record.best = result.best;
    result.history.push_back(record);
    // A single-point space has nothing left to explore.
    if (g == options.generations || space.Degenerate()) break;

    const std::size_t keep = std::min(options.survivors, record.population.size());
    population.clear();
    members.clear();
    for (std::size_t i = 0; i < keep; ++i) admit(record.population[i].config);
    for (std::size_t i = 0; i < keep; ++i) {
      for (auto& child : Neighbors(record.population[i].config, space,
                                   options.children_per_survivor, rng)) {
        admit(child);
      }
    }
  }
  result.evaluations = cache.size();
  return result;
}

}  // namespace driftbench
