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
#include <random>
#include <string_view>

namespace driftbench {

// Seeded random source with platform-stable draws. The engine is
// std::mt19937_64 (bit-exact by the standard); the derived variates are
// computed here because std:: distributions differ between library vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  std::uint64_t Between(std::uint64_t lo, std::uint64_t hi) {
    return lo + Below(hi - lo + 1);
  }
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent seed for a named component from a master seed.
std::uint64_t DeriveSeed(std::uint64_t master, std::string_view component);
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

// 64-bit FNV-1a over raw bytes.
std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace driftbench
