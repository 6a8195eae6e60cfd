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

#include <optional>

#include "driftbench/core/prob_dist.h"

namespace driftbench {

// Hellinger distance in [0, 1]; keys missing from one side count as 0.
// Results below 1e-12 are reported as 0. Throws ValidationError when either
// input does not sum to 1 within 1e-9.
double Hellinger(const ProbDist& p, const ProbDist& q);

// Hellinger where an absent estimate is maximally distant from a present
// one; two absent estimates are at distance 0.
double HellingerOrSaturate(const std::optional<ProbDist>& p,
                           const std::optional<ProbDist>& q);

// KL(p || q) after epsilon smoothing, epsilon = eps_fraction times the
// smallest positive probability of either input. Every key of p missing
// from q is given epsilon in q, and q's own entries are lowered by
// epsilon * z / n (z added keys, n original keys) to keep the sum at 1.
// Keys missing from p contribute nothing. Throws ValidationError for empty
// inputs or eps_fraction outside (0, 1).
double KlDivergenceSmoothed(const ProbDist& p, const ProbDist& q,
                            double eps_fraction = 0.01);

}  // namespace driftbench
