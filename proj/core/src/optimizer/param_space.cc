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

#include "driftbench/optimizer/param_space.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "driftbench/core/types.h"
#include "driftbench/ranking/sampler_spec.h"

namespace driftbench {

ParamSpace::ParamSpace(std::vector<ParamDef> params) : params_(std::move(params)) {
  std::set<std::string> names;
  for (auto& p : params_) {
    if (p.name.empty()) throw ValidationError("parameter without a name");
    if (!names.insert(p.name).second) {
      throw ValidationError("duplicate parameter " + p.name);
    }
    if (p.probability) {
      p.min = std::clamp(p.min, 0.0, 1.0);
      p.max = std::clamp(p.max, 0.0, 1.0);
    }
    if (!(p.min <= p.max)) throw ValidationError(p.name + ": min exceeds max");
    if (!(p.step > 0.0)) throw ValidationError(p.name + ": step must be positive");
    if (p.scale == ParamScale::kLog) {
      if (!(p.step > 1.0)) throw ValidationError(p.name + ": log step must exceed 1");
      if (!(p.min > 0.0)) throw ValidationError(p.name + ": log range must be positive");
    }
  }
}

void ParamSpace::BoundWindows(std::uint64_t length) {
  for (auto& p : params_) {
    if (!p.window) continue;
    p.max = std::min(p.max, static_cast<double>(length));
    if (p.min > p.max) {
      throw ValidationError(p.name + ": window range lies beyond the stream length");
    }
  }
}

Config ParamSpace::Snap(const Config& config) const {
  Config out;
  for (const auto& p : params_) {
    auto it = config.find(p.name);
    if (it == config.end()) throw ValidationError("config lacks parameter " + p.name);
    double v = std::clamp(it->second, p.min, p.max);
    if (p.kind == ParamKind::kInteger) v = std::round(v);
    out[p.name] = v;
  }
  for (const auto& [name, value] : config) {
    if (!out.count(name)) throw ValidationError("unknown parameter " + name);
  }
  return out;
}

bool ParamSpace::Degenerate() const {
  return std::all_of(params_.begin(), params_.end(),
                     [](const auto& p) { return p.min == p.max; });
}

std::string CanonicalConfig(const Config& config) {
  std::string out;
  for (const auto& [name, value] : config) {
    if (!out.empty()) out += ",";
    out += name + "=" + FormatDouble(value);
  }
  return out;
}

namespace {

// Distinct reachable values of one parameter; index 0 is the current value.
std::vector<double> Moves(const ParamDef& p, double v) {
  double down = p.scale == ParamScale::kLog ? v / p.step : v - p.step;
  double up = p.scale == ParamScale::kLog ? v * p.step : v + p.step;
  down = std::clamp(down, p.min, p.max);
  up = std::clamp(up, p.min, p.max);
  if (p.kind == ParamKind::kInteger) {
    down = std::round(down);
    up = std::round(up);
  }
  std::vector<double> out{v};
  if (down != v) out.push_back(down);
  if (up != v && up != down) out.push_back(up);
  return out;
}

constexpr std::size_t kEnumerateLimit = 10000;

}  // namespace

std::vector<Config> Neighbors(const Config& config, const ParamSpace& space,
                              std::size_t count, Rng& rng) {
  if (count == 0) throw ValidationError("neighbour count must be >= 1");
  const Config base = space.Snap(config);
  const auto& params = space.params();
  std::vector<std::vector<double>> moves;
  std::size_t total = 1;
  bool huge = false;
  for (const auto& p : params) {
    moves.push_back(Moves(p, base.at(p.name)));
    if (total > kEnumerateLimit + 1) {
      huge = true;
    } else {
      total *= moves.back().size();
    }
  }
  huge = huge || total > kEnumerateLimit + 1;

  auto build = [&](const std::vector<std::size_t>& choice) {
    Config c;
    for (std::size_t i = 0; i < params.size(); ++i) c[params[i].name] = moves[i][choice[i]];
    return c;
  };

  std::vector<Config> out;
  if (!huge) {
    if (total <= 1) return out;
    std::vector<std::size_t> choice(params.size(), 0);
    for (std::size_t n = 1; n < total; ++n) {
      for (std::size_t i = 0; i < choice.size(); ++i) {
        if (++choice[i] < moves[i].size()) break;
        choice[i] = 0;
      }
      out.push_back(build(choice));
    }
    for (std::size_t i = out.size() - 1; i > 0; --i) {
      std::swap(out[i], out[rng.Below(i + 1)]);
    }
    if (out.size() > count) out.resize(count);
    return out;
  }

  std::set<std::string> seen{CanonicalConfig(base)};
  std::vector<std::size_t> choice(params.size());
  for (std::size_t attempts = 0; out.size() < count && attempts < 100 * count;
       ++attempts) {
    for (std::size_t i = 0; i < choice.size(); ++i) choice[i] = rng.Below(moves[i].size());
    Config c = build(choice);
    if (seen.insert(CanonicalConfig(c)).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace driftbench
