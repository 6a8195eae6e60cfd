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

#include "driftbench/metrics/distance.h"

#include <cmath>
#include <vector>

namespace driftbench {
namespace {

constexpr double kNormTolerance = 1e-9;

void RequireNormalized(const ProbDist& d, const char* what) {
  if (d.size() == 0 || std::abs(d.Sum() - 1.0) > kNormTolerance) {
    throw ValidationError(std::string(what) + " is not a normalised distribution");
  }
}

}  // namespace

double Hellinger(const ProbDist& p, const ProbDist& q) {
  RequireNormalized(p, "first argument");
  RequireNormalized(q, "second argument");
  const auto a = p.entries();
  const auto b = q.entries();
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    double x = 0.0;
    double y = 0.0;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      x = a[i++].second;
    } else if (i == a.size() || b[j].first < a[i].first) {
      y = b[j++].second;
    } else {
      x = a[i++].second;
      y = b[j++].second;
    }
    const double diff = std::sqrt(x) - std::sqrt(y);
    sum += diff * diff;
  }
  const double h = std::sqrt(sum / 2.0);
  if (h < 1e-12) return 0.0;
  return h > 1.0 ? 1.0 : h;
}

double HellingerOrSaturate(const std::optional<ProbDist>& p,
                           const std::optional<ProbDist>& q) {
  if (!p && !q) return 0.0;
  if (!p || !q) return 1.0;
  return Hellinger(*p, *q);
}

double KlDivergenceSmoothed(const ProbDist& p, const ProbDist& q,
                            double eps_fraction) {
  if (p.size() == 0 || q.size() == 0) {
    throw ValidationError("KL divergence needs non-empty distributions");
  }
  if (!(eps_fraction > 0.0 && eps_fraction < 1.0)) {
    throw ValidationError("eps_fraction must lie in (0, 1)");
  }
  const double eps = eps_fraction * std::min(p.MinPositive(), q.MinPositive());
  std::size_t added = 0;
  for (const auto& [key, w] : p.entries()) {
    if (q.Probability(key) == 0.0) ++added;
  }
  const double shave = eps * static_cast<double>(added) / static_cast<double>(q.size());
  double kl = 0.0;
  for (const auto& [key, w] : p.entries()) {
    const double raw = q.Probability(key);
    const double smoothed = raw == 0.0 ? eps : raw - shave;
    if (!(smoothed > 0.0)) {
      throw ValidationError("smoothing left a non-positive probability");
    }
    kl += w * std::log(w / smoothed);
  }
  return kl < 0.0 ? 0.0 : kl;
}

}  // namespace driftbench
