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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "driftbench/adaptive/oracle.h"
#include "driftbench/generator/burst.h"
#include "driftbench/generator/rng.h"
#include "driftbench/generator/stream.h"
#include "driftbench/generator/zipf.h"
#include "driftbench/metrics/ground_truth.h"
#include "random_sets.h"

namespace driftbench {
namespace {

DistPtr Point(Key k) { return Share(ProbDist::PointMass(k)); }

std::map<Key, std::uint64_t> Multiset(const std::vector<Key>& keys) {
  std::map<Key, std::uint64_t> out;
  for (Key k : keys) ++out[k];
  return out;
}

TEST(RngTest, BelowStaysInRangeAndDerivationSeparatesComponents) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.Below(7), 7u);
  EXPECT_EQ(DeriveSeed(5, "stream:a"), DeriveSeed(5, "stream:a"));
  EXPECT_NE(DeriveSeed(5, "stream:a"), DeriveSeed(5, "stream:b"));
  EXPECT_NE(DeriveSeed(5, std::uint64_t{1}), DeriveSeed(5, std::uint64_t{2}));
  EXPECT_NE(DeriveSeed(5, "x"), DeriveSeed(6, "x"));
}

TEST(ZipfTest, SingleKey) {
  const auto d = ZipfianDist(1, 3.0, std::nullopt);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_DOUBLE_EQ(d.Probability(1), 1.0);
}

TEST(ZipfTest, TwoKeysHarmonic) {
  const auto d = ZipfianDist(2, 1.0, std::nullopt);
  EXPECT_NEAR(d.Probability(1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(d.Probability(2), 1.0 / 3.0, 1e-15);
}

TEST(ZipfTest, FourKeysExponentTwo) {
  const auto d = ZipfianDist(4, 2.0, std::nullopt);
  const double norm = 1.0 + 0.25 + 1.0 / 9.0 + 1.0 / 16.0;
  EXPECT_NEAR(norm, 1.42361, 1e-5);
  EXPECT_NEAR(d.Probability(1), 1.0 / norm, 1e-15);
  EXPECT_NEAR(d.Probability(3), 1.0 / 9.0 / norm, 1e-15);
}

TEST(ZipfTest, PermutationKeepsTheMassProfile) {
  const auto plain = ZipfianDist(500, 1.0, std::nullopt);
  const auto perm = ZipfianDist(500, 1.0, 99);
  const auto again = ZipfianDist(500, 1.0, 99);
  EXPECT_EQ(perm, again);
  EXPECT_NE(perm, plain);
  std::vector<double> a, b;
  for (const auto& [k, w] : plain.entries()) a.push_back(w);
  for (const auto& [k, w] : perm.entries()) b.push_back(w);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
}

TEST(ZipfTest, RejectsBadParameters) {
  EXPECT_THROW(ZipfianDist(0, 1.0, std::nullopt), ValidationError);
  EXPECT_THROW(ZipfianDist(5, 0.0, std::nullopt), ValidationError);
}

TEST(DeltaChooseTest, Examples) {
  const auto p1 = ProbDist::PointMass(1);
  const auto p2 = ProbDist::PointMass(2);
  EXPECT_EQ(&DeltaChoose(0.0, p1, p2, 0.5), &p1);
  EXPECT_EQ(&DeltaChoose(1.0, p1, p2, 0.0), &p2);
  EXPECT_EQ(&DeltaChoose(1.0, p1, p2, 1.0), &p2);
  EXPECT_EQ(&DeltaChoose(0.25, p1, p2, 0.9), &p1);
  EXPECT_EQ(&DeltaChoose(0.25, p1, p2, 0.1), &p2);
}

TEST(GenerateStreamTest, PointMassStream) {
  const auto out = GenerateStream(DriftSet{{Drift::Abrupt(1, Point(7), Point(7))}, 5}, 1);
  EXPECT_EQ(out.keys, (std::vector<Key>{7, 7, 7, 7, 7}));
  EXPECT_EQ(out.metadata.n, 5u);
}

TEST(GenerateStreamTest, AbruptSwitchIsExact) {
  auto a = Point(1);
  auto b = Point(2);
  const auto out =
      GenerateStream(DriftSet{{Drift::Abrupt(1, a, a), Drift::Abrupt(40, a, b)}, 100}, 3);
  for (std::size_t i = 0; i < out.keys.size(); ++i) {
    EXPECT_EQ(out.keys[i], i + 1 < 40 ? 1u : 2u) << "index " << i + 1;
  }
}

TEST(GenerateStreamTest, RejectsInvalidSets) {
  EXPECT_THROW(GenerateStream(DriftSet{{Drift::Abrupt(2, Point(1), Point(1))}, 5}, 1),
               ValidationError);
  EXPECT_THROW(GenerateStream(DriftSet{{}, 0}, 1), ValidationError);
}

TEST(GenerateStreamTest, GradualRampFollowsProgress) {
  auto a = Point(1);
  auto b = Point(2);
  const std::uint64_t n = 200000;
  const auto out = GenerateStream(
      DriftSet{{Drift::Abrupt(1, a, a), Drift::Gradual(2, n, a, b)}, n}, 17);
  const std::uint64_t window = 10000;
  for (std::uint64_t lo = 0; lo + window <= n; lo += window) {
    const auto share = std::count(out.keys.begin() + lo, out.keys.begin() + lo + window, Key{2});
    double expected = 0.0;
    for (std::uint64_t i = lo + 1; i <= lo + window; ++i) {
      expected += i < 2 ? 0.0 : static_cast<double>(i - 2) / static_cast<double>(n - 2);
    }
    EXPECT_NEAR(static_cast<double>(share) / window, expected / window, 0.05) << "window at " << lo;
  }
}

TEST(GenerateStreamTest, DeterministicForEqualSeeds) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = testing::RandomDriftSet(rng);
    const auto a = GenerateStream(set, 100 + trial);
    const auto b = GenerateStream(set, 100 + trial);
    EXPECT_EQ(a.keys, b.keys);
    EXPECT_EQ(GenerateStream(a.metadata).keys, a.keys);
  }
}

TEST(GenerateStreamTest, EmpiricalLawMatchesConstantConcept) {
  const std::uint64_t n = 1000000;
  auto z = Share(ZipfianDist(100, 1.0, 4));
  const auto out = GenerateStream(DriftSet{{Drift::Abrupt(1, z, z)}, n}, 21);
  const auto counts = ExactFrequencies(out.keys);
  double tv = 0.0;
  for (const auto& [k, p] : z->entries()) {
    tv += std::abs(counts.CountOf(k) / static_cast<double>(n) - p);
  }
  EXPECT_LE(tv / 2.0, 0.01);
}

TEST(BurstTest, ConfigValidation) {
  EXPECT_NO_THROW((BurstConfig{0.5, 0.5, 1, 3}.Validate()));
  EXPECT_THROW((BurstConfig{1.5, 0.5, 1, 3}.Validate()), ValidationError);
  EXPECT_THROW((BurstConfig{0.5, -0.1, 1, 3}.Validate()), ValidationError);
  EXPECT_THROW((BurstConfig{0.5, 0.5, 0, 3}.Validate()), ValidationError);
  EXPECT_THROW((BurstConfig{0.5, 0.5, 4, 3}.Validate()), ValidationError);
}

TEST(BurstTest, GroupedReleaseExample) {
  StreamBuffer src;
  src.keys = {1, 2, 1, 2};
  src.metadata.n = 4;
  src.metadata.num_keys = 2;
  const auto out = InjectBursts(src, BurstConfig{1.0, 1.0, 1, 1}, 2, 7);
  EXPECT_EQ(out.keys, (std::vector<Key>{1, 1, 2, 2}));
  ASSERT_FALSE(out.metadata.bursts.empty());
  EXPECT_EQ(out.metadata.bursts[0].start_batch, 1u);
  EXPECT_EQ(out.metadata.bursts[0].length_batches, 1u);
}

TEST(BurstTest, NoBurstsWithZeroStartProbability) {
  Rng rng(2);
  const auto keys = testing::RandomKeys(rng, 5000, 50, true);
  StreamBuffer src;
  src.keys = keys;
  src.metadata.n = keys.size();
  src.metadata.num_keys = 50;
  const auto out = InjectBursts(src, BurstConfig{0.0, 0.9, 1, 4}, 100, 3);
  EXPECT_EQ(out.keys, keys);
  EXPECT_TRUE(out.metadata.bursts.empty());
}

TEST(BurstTest, NoFaultyKeysLeavesStreamUnchanged) {
  Rng rng(3);
  const auto keys = testing::RandomKeys(rng, 5000, 50, true);
  StreamBuffer src;
  src.keys = keys;
  src.metadata.n = keys.size();
  src.metadata.num_keys = 50;
  const auto out = InjectBursts(src, BurstConfig{1.0, 0.0, 1, 4}, 100, 3);
  EXPECT_EQ(out.keys, keys);
}

TEST(BurstPropertyTest, KeyMultisetIsConserved) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t universe = rng.Between(1, 40);
    const auto keys = testing::RandomKeys(rng, rng.Between(1, 3000), universe, rng.Bernoulli(0.5));
    StreamBuffer src;
    src.keys = keys;
    src.metadata.n = keys.size();
    src.metadata.num_keys = universe;
    const std::uint64_t bl_min = rng.Between(1, 4);
    const BurstConfig cfg{rng.Uniform(), rng.Uniform(), bl_min, bl_min + rng.Below(4)};
    const auto out = InjectBursts(src, cfg, rng.Between(1, 200), rng.Next());
    ASSERT_EQ(out.keys.size(), keys.size());
    EXPECT_EQ(Multiset(out.keys), Multiset(keys)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace driftbench
