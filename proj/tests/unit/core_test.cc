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

#include "driftbench/core/concept.h"
#include "driftbench/core/conversions.h"
#include "driftbench/core/drift.h"
#include "driftbench/core/estimate.h"
#include "driftbench/core/prob_dist.h"
#include "random_sets.h"

namespace driftbench {
namespace {

DistPtr Point(Key k) { return Share(ProbDist::PointMass(k)); }

TEST(ProbDistTest, FromWeightsSortsMergesAndDropsZeros) {
  const auto d = ProbDist::FromWeights({{3, 0.25}, {1, 0.5}, {3, 0.25}, {9, 0.0}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.entries()[0], (ProbDist::Entry{1, 0.5}));
  EXPECT_EQ(d.entries()[1], (ProbDist::Entry{3, 0.5}));
  EXPECT_EQ(d.Probability(9), 0.0);
  EXPECT_EQ(d.Probability(42), 0.0);
}

TEST(ProbDistTest, FromWeightsRejectsBadInput) {
  EXPECT_THROW(ProbDist::FromWeights({{1, 0.5}}), ValidationError);
  EXPECT_THROW(ProbDist::FromWeights({{1, 1.5}, {2, -0.5}}), ValidationError);
  EXPECT_THROW(ProbDist::Normalize({{1, 0.0}}), ValidationError);
}

TEST(ProbDistTest, MixtureWeightsBothSides) {
  const auto a = ProbDist::FromWeights({{1, 0.5}, {2, 0.5}});
  const auto b = ProbDist::PointMass(3);
  const auto m = ProbDist::Mixture(a, b, 0.25);
  EXPECT_DOUBLE_EQ(m.Probability(1), 0.375);
  EXPECT_DOUBLE_EQ(m.Probability(2), 0.375);
  EXPECT_DOUBLE_EQ(m.Probability(3), 0.25);
  EXPECT_THROW(ProbDist::Mixture(a, b, 1.5), ValidationError);
}

TEST(ProbDistTest, NormalizationHoldsAfterRandomMixtures) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testing::RandomDist(rng, 50);
    const auto b = testing::RandomDist(rng, 50);
    const auto m = ProbDist::Mixture(*a, *b, rng.Uniform());
    EXPECT_NEAR(m.Sum(), 1.0, 1e-9);
    EXPECT_NEAR(a->Sum(), 1.0, 1e-9);
  }
}

TEST(EstimateTest, ThresholdAndTopK) {
  std::vector<Estimate::Entry> counts{{1, 2}, {2, 1}};
  const auto phi = SelectThreshold(counts, 3, Threshold{0.5});
  ASSERT_EQ(phi.counts.size(), 1u);
  EXPECT_EQ(phi.counts[0], (Estimate::Entry{1, 2}));

  EXPECT_EQ(SelectTopK(counts, 3, TopK{5}).counts.size(), 2u);
  EXPECT_EQ(SelectThreshold(counts, 3, Threshold{0.0}).counts.size(), 2u);
  EXPECT_THROW(SelectTopK(counts, 3, TopK{0}), ValidationError);
  EXPECT_THROW(SelectThreshold(counts, 3, Threshold{1.5}), ValidationError);
}

TEST(EstimateTest, TopKBreaksTiesTowardsSmallerKey) {
  std::vector<Estimate::Entry> counts{{9, 4}, {5, 4}, {7, 4}, {1, 1}};
  const auto top = SelectTopK(counts, 13, TopK{2});
  ASSERT_EQ(top.counts.size(), 2u);
  EXPECT_EQ(top.counts[0].first, 5u);
  EXPECT_EQ(top.counts[1].first, 7u);
}

TEST(EstimateTest, RelativeFrequenciesUseReportedSum) {
  Estimate e{{{1, 3}, {2, 1}}, 100};
  const auto rel = e.RelativeFrequencies();
  ASSERT_TRUE(rel.has_value());
  EXPECT_DOUBLE_EQ(rel->Probability(1), 0.75);
  EXPECT_FALSE(Estimate{}.RelativeFrequencies().has_value());
}

TEST(DriftTest, DerivedStartAndEnd) {
  const Drift gradual{4, 6, Point(1), Point(2)};
  EXPECT_EQ(gradual.start(), 1);
  EXPECT_EQ(gradual.end(), 5);
  const Drift odd{3, 9, Point(1), Point(2)};  // mid 4.5
  EXPECT_EQ(odd.start(), 3);
  EXPECT_EQ(odd.end(), 6);
  EXPECT_TRUE(odd.HasValidParity());
  EXPECT_FALSE((Drift{3, 8, Point(1), Point(2)}).HasValidParity());
}

TEST(ValidateDriftSetTest, MinimalSetIsValid) {
  DriftSet set{{Drift::Abrupt(1, Point(1), Point(2))}, 10};
  EXPECT_TRUE(ValidateDriftSet(set).ok());
}

TEST(ValidateDriftSetTest, ContinuityViolation) {
  auto a = Point(1);
  auto b = Point(2);
  DriftSet set{{Drift::Abrupt(1, a, a), Drift{4, 10, b, b}}, 10};
  const auto report = ValidateDriftSet(set);
  ASSERT_TRUE(report.Has(DriftRule::kContinuity));
  EXPECT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].drifts, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(ValidateDriftStructure(set).ok());
}

TEST(ValidateDriftSetTest, EqualContentCountsAsContinuous) {
  DriftSet set{{Drift::Abrupt(1, Point(1), Point(1)), Drift::Abrupt(5, Point(1), Point(2))}, 10};
  EXPECT_TRUE(ValidateDriftSet(set).ok());
}

TEST(ValidateDriftSetTest, ParityViolation) {
  DriftSet set{{Drift{3, 8, Point(1), Point(1)}}, 10};
  EXPECT_TRUE(ValidateDriftSet(set).Has(DriftRule::kParity));
}

TEST(ValidateDriftSetTest, PositionalRules) {
  auto p = Point(1);
  EXPECT_TRUE(ValidateDriftSet({{Drift::Abrupt(0, p, p)}, 10}).Has(DriftRule::kStartBeforeOne));
  EXPECT_TRUE(ValidateDriftSet({{Drift::Abrupt(1, p, p), Drift::Gradual(5, 12, p, p)}, 10})
                  .Has(DriftRule::kEndAfterStream));
  EXPECT_TRUE(ValidateDriftSet({{Drift::Abrupt(2, p, p)}, 10}).Has(DriftRule::kNoInitialDrift));
  EXPECT_TRUE(ValidateDriftSet({{Drift::Abrupt(1, p, p), Drift::Gradual(3, 6, p, p),
                                 Drift::Abrupt(6, p, p)},
                                10})
                  .Has(DriftRule::kOverlap));
  EXPECT_TRUE(ValidateDriftSet({{}, 10}).Has(DriftRule::kEmpty));
  EXPECT_TRUE(ValidateDriftSet({{Drift::Abrupt(1, p, nullptr)}, 10})
                  .Has(DriftRule::kMissingDistribution));
}

TEST(ValidateDriftSetTest, RandomSetsAreValid) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto set = testing::RandomDriftSet(rng);
    EXPECT_TRUE(ValidateDriftSet(set).ok()) << ValidateDriftSet(set).ToString();
  }
}

TEST(DriftTimelineTest, LocatesGenerationRules) {
  auto a = Point(1);
  auto b = Point(2);
  // Initial drift at 1, gradual drift on [4, 8], abrupt drift at 10.
  DriftSet set{{Drift::Abrupt(10, b, a), Drift::Gradual(4, 8, a, b), Drift::Abrupt(1, a, a)}, 12};
  const DriftTimeline timeline(set);
  EXPECT_EQ(timeline.Locate(1).rule, GenerationRule::kAtAbrupt);
  EXPECT_EQ(timeline.Locate(1).drift, 2u);
  EXPECT_EQ(timeline.Locate(3).rule, GenerationRule::kAfterDriftEnd);
  EXPECT_EQ(timeline.Locate(4).rule, GenerationRule::kInsideGradual);
  EXPECT_EQ(timeline.Locate(8).rule, GenerationRule::kInsideGradual);
  EXPECT_EQ(timeline.Locate(9).rule, GenerationRule::kAfterDriftEnd);
  EXPECT_EQ(timeline.Locate(9).drift, 1u);
  EXPECT_EQ(timeline.Locate(10).rule, GenerationRule::kAtAbrupt);
  EXPECT_EQ(timeline.Locate(12).drift, 0u);
  EXPECT_THROW(timeline.Locate(0), std::out_of_range);
  EXPECT_THROW(timeline.Locate(13), std::out_of_range);
  EXPECT_DOUBLE_EQ(DriftTimeline::Progress(set.drifts[1], 5), 0.25);
}

TEST(ConceptTest, TrueDistribution) {
  auto p1 = Point(1);
  auto p2 = Point(2);
  ConceptSet set{{Concept::Changing(1, 5, p1, p2), Concept::Constant(6, 10, p2)}, 10};
  EXPECT_EQ(TrueDistribution(set, 1), *p1);
  EXPECT_DOUBLE_EQ(TrueDistribution(set, 3).Probability(1), 0.5);
  EXPECT_DOUBLE_EQ(TrueDistribution(set, 3).Probability(2), 0.5);
  EXPECT_EQ(TrueDistribution(set, 5), *p2);
  EXPECT_EQ(TrueDistribution(set, 8), *p2);
  EXPECT_THROW(TrueDistribution(set, 11), std::out_of_range);
}

TEST(ConceptTest, CoverageIsChecked) {
  auto p = Point(1);
  EXPECT_FALSE(IsValidConceptSet({{Concept::Constant(1, 4, p), Concept::Constant(6, 10, p)}, 10}));
  EXPECT_FALSE(IsValidConceptSet({{Concept::Constant(1, 6, p), Concept::Constant(6, 10, p)}, 10}));
  EXPECT_FALSE(IsValidConceptSet({{Concept::Constant(1, 9, p)}, 10}));
  EXPECT_TRUE(IsValidConceptSet({{Concept::Constant(1, 10, p)}, 10}));
  EXPECT_FALSE(IsValidConceptSet({{Concept::Changing(1, 1, p, p), Concept::Constant(2, 10, p)}, 10}));
  EXPECT_THROW(CheckConceptSet({{}, 10}), ValidationError);
}

TEST(ConversionTest, ConstantConceptBecomesInitialAbruptDrift) {
  auto p = Point(4);
  const auto drifts = ConceptsToDrifts({{Concept::Constant(1, 10, p)}, 10});
  ASSERT_EQ(drifts.drifts.size(), 1u);
  EXPECT_EQ(drifts.drifts[0].length, 0u);
  EXPECT_EQ(drifts.drifts[0].doubled_mid, 2u);
  EXPECT_EQ(drifts.drifts[0].to, p);
}

TEST(ConversionTest, ChangingConceptBecomesGradualDrift) {
  auto p0 = Point(1);
  auto p1 = Point(2);
  auto p2 = Point(3);
  ConceptSet set{{Concept::Constant(1, 2, p0), Concept::Changing(3, 7, p1, p2),
                  Concept::Constant(8, 10, p2)},
                 10};
  const auto drifts = ConceptsToDrifts(set);
  ASSERT_EQ(drifts.drifts.size(), 3u);
  EXPECT_EQ(drifts.drifts[1].length, 4u);
  EXPECT_EQ(drifts.drifts[1].doubled_mid, 10u);  // mid 5
  EXPECT_EQ(drifts.drifts[2].from, p2);
}

TEST(ConversionTest, AbruptDriftBecomesConstantConcept) {
  const auto concepts = DriftsToConcepts({{Drift::Abrupt(1, Point(9), Point(4))}, 10});
  ASSERT_EQ(concepts.concepts.size(), 1u);
  EXPECT_EQ(concepts.concepts[0].start, 1u);
  EXPECT_EQ(concepts.concepts[0].end, 10u);
  EXPECT_FALSE(concepts.concepts[0].IsChanging());
}

TEST(ConversionTest, GradualDriftSplitsIntoTwoConcepts) {
  auto p1 = Point(1);
  auto p2 = Point(2);
  const auto concepts = DriftsToConcepts({{Drift{4, 6, p1, p2}}, 10});
  ASSERT_EQ(concepts.concepts.size(), 2u);
  EXPECT_TRUE(concepts.concepts[0].IsChanging());
  EXPECT_EQ(concepts.concepts[0].start, 1u);
  EXPECT_EQ(concepts.concepts[0].end, 5u);
  EXPECT_EQ(concepts.concepts[1].start, 6u);
  EXPECT_EQ(concepts.concepts[1].end, 10u);
  EXPECT_EQ(concepts.concepts[1].Initial(), p2);
}

TEST(ConversionTest, DriftsToConceptsRejectsBrokenStructure) {
  auto p = Point(1);
  EXPECT_THROW(DriftsToConcepts({{Drift::Abrupt(2, p, p)}, 10}), ValidationError);
}

TEST(ConversionPropertyTest, DriftConceptsAlwaysCoverTheStream) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto set = testing::RandomDriftSet(rng);
    EXPECT_TRUE(IsValidConceptSet(DriftsToConcepts(set)));
  }
}

TEST(ConversionPropertyTest, ConceptRoundTripPreservesTrueDistribution) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto concepts = testing::RandomConceptSet(rng, 300);
    const auto drifts = ConceptsToDrifts(concepts);
    ASSERT_TRUE(ValidateDriftSet(drifts).ok()) << ValidateDriftSet(drifts).ToString();
    const auto back = DriftsToConcepts(drifts);
    for (std::uint64_t i = 1; i <= concepts.n; ++i) {
      ASSERT_LE(testing::MaxAbsDiff(TrueDistribution(concepts, i), TrueDistribution(back, i)),
                1e-12)
          << "trial " << trial << " index " << i;
    }
  }
}

}  // namespace
}  // namespace driftbench
