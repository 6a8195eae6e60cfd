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

#include <cmath>
#include <map>
#include <memory>

#include "driftbench/metrics/ground_truth.h"
#include "driftbench/samplers/exact_counting.h"
#include "driftbench/samplers/frequent.h"
#include "driftbench/samplers/landmark.h"
#include "driftbench/samplers/lossy_counting.h"
#include "driftbench/samplers/space_saving.h"
#include "driftbench/samplers/sticky_sampling.h"
#include "random_sets.h"

namespace driftbench {
namespace {

constexpr Key kA = 1, kB = 2, kC = 3, kD = 4;

using Counts = std::vector<Estimate::Entry>;

void Feed(Sampler& s, const std::vector<Key>& keys) {
  for (Key k : keys) s.Record(k);
}

SamplerFactory ExactFactory() {
  return [] { return std::make_unique<ExactCounting>(); };
}

TEST(SamplerQueryTest, ThresholdExample) {
  ExactCounting s;
  Feed(s, {kA, kA, kB});
  EXPECT_EQ(s.Query(Threshold{0.5}).counts, (Counts{{kA, 2}}));
  EXPECT_EQ(s.Query(Threshold{0.0}).counts, (Counts{{kA, 2}, {kB, 1}}));
  EXPECT_EQ(s.Query(TopK{10}).counts, (Counts{{kA, 2}, {kB, 1}}));
  EXPECT_EQ(s.Query(TopK{1}).counts, (Counts{{kA, 2}}));
  EXPECT_EQ(s.QueryAll().total, 3u);
}

TEST(SamplerQueryTest, RelativeFrequencies) {
  ExactCounting s;
  EXPECT_FALSE(s.RelativeFrequencies().has_value());
  Feed(s, {kA, kA, kB, kA});
  const auto rel = s.RelativeFrequencies();
  ASSERT_TRUE(rel.has_value());
  EXPECT_DOUBLE_EQ(rel->Probability(kA), 0.75);
}

TEST(LossyCountingTest, Example) {
  LossyCounting s(0.5);
  EXPECT_EQ(s.bucket_width(), 2u);
  Feed(s, {kA, kA, kB, kC});
  EXPECT_EQ(s.QueryAll().counts, (Counts{{kA, 2}}));
  EXPECT_EQ(s.TotalProcessed(), 4u);
}

TEST(LossyCountingTest, RejectsBadEpsilon) {
  EXPECT_THROW(LossyCounting(0.0), ValidationError);
  EXPECT_THROW(LossyCounting(1.0), ValidationError);
}

TEST(LossyCountingPropertyTest, ErrorStaysWithinEpsilonN) {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const double eps = 0.005 + rng.Uniform() * 0.1;
    const auto keys = testing::RandomKeys(rng, rng.Between(1, 20000), 300, rng.Bernoulli(0.7));
    LossyCounting s(eps);
    Feed(s, keys);
    const auto exact = ExactFrequencies(keys);
    const auto est = s.QueryAll();
    const double bound = eps * static_cast<double>(keys.size());
    for (const auto& [k, c] : exact.counts) {
      const double e = est.CountOf(k);
      EXPECT_LE(e, c);
      EXPECT_LE(c - e, bound) << "key " << k << " trial " << trial;
    }
  }
}

TEST(SpaceSavingTest, Example) {
  SpaceSaving s(2);
  Feed(s, {kA, kB, kC});
  EXPECT_EQ(s.QueryAll().counts, (Counts{{kA, 1}, {kC, 2}}));
  EXPECT_THROW(SpaceSaving(0), ValidationError);
}

TEST(SpaceSavingPropertyTest, OvershootIsBoundedAndCapacityHolds) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = rng.Between(1, 60);
    const auto keys = testing::RandomKeys(rng, rng.Between(1, 20000), 200, rng.Bernoulli(0.7));
    SpaceSaving s(m);
    for (Key k : keys) {
      s.Record(k);
      ASSERT_LE(s.CounterCount(), m);
    }
    const auto exact = ExactFrequencies(keys);
    const auto est = s.QueryAll();
    EXPECT_DOUBLE_EQ(est.SumOfCounts(), static_cast<double>(keys.size()));
    const double bound = static_cast<double>(keys.size()) / static_cast<double>(m);
    for (const auto& [k, c] : est.counts) {
      const double truth = exact.CountOf(k);
      EXPECT_GE(c, truth);
      EXPECT_LE(c - truth, bound);
    }
  }
}

TEST(StickySamplingTest, RatePrefixIsExact) {
  StickySampling s(0.1, 0.01, 0.1, 5);
  EXPECT_NEAR(s.t(), std::log(100.0) / 0.01, 1e-9);
  Rng rng(12);
  const auto keys = testing::RandomKeys(rng, 900, 100, true);
  Feed(s, keys);
  EXPECT_EQ(s.rate(), 1u);
  EXPECT_EQ(s.QueryAll().counts, ExactFrequencies(keys).counts);
}

TEST(StickySamplingTest, RateDoublesAndCountsNeverOvershoot) {
  StickySampling s(0.1, 0.05, 0.1, 9);
  Rng rng(13);
  const auto keys = testing::RandomKeys(rng, 20000, 500, true);
  Feed(s, keys);
  EXPECT_GT(s.rate(), 1u);
  const auto exact = ExactFrequencies(keys);
  for (const auto& [k, c] : s.QueryAll().counts) EXPECT_LE(c, exact.CountOf(k));
}

TEST(StickySamplingTest, RejectsBadParameters) {
  EXPECT_THROW(StickySampling(0.1, 0.2, 0.1, 1), ValidationError);
  EXPECT_THROW(StickySampling(0.0, 0.01, 0.1, 1), ValidationError);
  EXPECT_THROW(StickySampling(0.1, 0.01, 1.0, 1), ValidationError);
}

TEST(StickySamplingTest, SeedDeterminesState) {
  Rng rng(14);
  const auto keys = testing::RandomKeys(rng, 10000, 300, true);
  StickySampling a(0.1, 0.05, 0.1, 3), b(0.1, 0.05, 0.1, 3);
  Feed(a, keys);
  Feed(b, keys);
  EXPECT_EQ(a.QueryAll().counts, b.QueryAll().counts);
}

TEST(FrequentTest, Example) {
  Frequent s(2, 2, 1);
  Feed(s, {kA, kA, kB, kB});
  EXPECT_EQ(s.QueryAll().counts, (Counts{{kA, 2}, {kB, 2}}));
  EXPECT_THROW(Frequent(0, 1, 1), ValidationError);
}

TEST(FrequentTest, OldWindowsExpire) {
  Frequent s(2, 2, 2);
  Feed(s, {kA, kA, kB, kB, kC, kD});
  const auto est = s.QueryAll();
  EXPECT_EQ(est.CountOf(kA), 0.0);
  EXPECT_EQ(est.CountOf(kB), 2.0);
  EXPECT_EQ(est.CountOf(kC), 1.0);
}

TEST(LandmarkTest, Example) {
  Landmark s(ExactFactory(), 2);
  Feed(s, {kA, kA, kB});
  EXPECT_EQ(s.QueryAll().counts, (Counts{{kB, 1}}));
  EXPECT_EQ(s.TotalProcessed(), 3u);
  EXPECT_THROW(Landmark(ExactFactory(), 0), ValidationError);
  EXPECT_THROW(Landmark(SamplerFactory{}, 2), ValidationError);
}

TEST(LandmarkPropertyTest, StateCoversOnlyTheCurrentWindow) {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t window = rng.Between(1, 300);
    const auto keys = testing::RandomKeys(rng, rng.Between(1, 3000), 40, true);
    Landmark s(ExactFactory(), window);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      s.Record(keys[i]);
      const std::size_t since = (i + 1) % window;
      const std::span<const Key> tail(keys.data() + i + 1 - since, since);
      ASSERT_EQ(s.QueryAll().counts, ExactFrequencies(tail).counts) << "i=" << i;
    }
  }
}

}  // namespace
}  // namespace driftbench
