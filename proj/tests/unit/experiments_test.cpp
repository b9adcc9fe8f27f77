// Copyright 2026 The blockdom Authors
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

#include "blockdom/experiments.hpp"
#include "test_support.hpp"

namespace blockdom {
namespace {

TEST(ExampleIdTest, NamesRoundTrip) {
  for (ExampleId id : {ExampleId::kEx21, ExampleId::kEx22, ExampleId::kEx23, ExampleId::kEx24,
                       ExampleId::kEx31a, ExampleId::kEx31b})
    EXPECT_EQ(ParseExampleId(ToString(id)), id);
  EXPECT_THROW(ParseExampleId("ex9"), Error);
  EXPECT_TRUE(NeedsSeed(ExampleId::kEx23));
  EXPECT_FALSE(NeedsSeed(ExampleId::kEx21));
  EXPECT_FALSE(IsBoundsExample(ExampleId::kEx31b));
}

TEST(GoldenTest, Laplacian9MatchesTable) {
  const auto a = BuildTridiagonalExample(ExampleId::kEx21);
  const BoundsRun run = RunBounds(a, NormKind::kTwo);
  EXPECT_EQ(run.reports.size(), 8u);
  EXPECT_LE(run.residual, 1e-8);
  for (const auto& row : CompareGolden(run, ExampleId::kEx21))
    EXPECT_TRUE(row.pass) << "t=" << row.t << " " << row.quantity << " expected " << row.expected
                          << " got " << row.computed;
}

TEST(GoldenTest, ShiftedNonsymmetricMatchesTable) {
  const BoundsRun run = RunBounds(BuildTridiagonalExample(ExampleId::kEx22), NormKind::kTwo);
  EXPECT_LE(run.residual, 1e-8);
  for (const auto& row : CompareGolden(run, ExampleId::kEx22))
    EXPECT_TRUE(row.pass) << "t=" << row.t << " " << row.quantity << " expected " << row.expected
                          << " got " << row.computed;
}

TEST(ScaledExamplesTest, TablesAreScaleInvariant) {
  const auto base = ComputeTauOmega(BuildTridiagonalExample(ExampleId::kEx21), NormKind::kTwo);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto scaled = BuildTridiagonalExample(ExampleId::kEx23, seed);
    EXPECT_LE(MaxTableDifference(base, ComputeTauOmega(scaled, NormKind::kTwo)), 1e-12);
  }
}

TEST(ScaledExamplesTest, PropertiesHold) {
  for (ExampleId id : {ExampleId::kEx23, ExampleId::kEx24}) {
    const BoundsRun run = RunBounds(BuildTridiagonalExample(id, 5), NormKind::kTwo);
    EXPECT_TRUE(run.dominance.strict);
    EXPECT_TRUE(run.corner_conditions);
    for (std::size_t k = 0; k < run.reports.size(); ++k) {
      EXPECT_EQ(CountBoundViolations(run.reports[k]), 0u);
      if (k > 0) EXPECT_EQ(CountMonotonicityViolations(run.reports[k - 1], run.reports[k]), 0u);
    }
  }
}

TEST(RunBoundsTest, RejectsNonDominantInput) {
  const auto a = TridiagonalFromDense(BuildTridiagToeplitz(4, -1.0, 1.5, -1.0), 1);
  EXPECT_THROW(RunBounds(a, NormKind::kTwo), DominanceViolation);
}

TEST(RunBoundsTest, StepRangeIsHonoured) {
  const auto a = TridiagonalFromDense(BuildTridiagToeplitz(6, -1.0, 3.0, -1.0), 1);
  const BoundsRun run = RunBounds(a, NormKind::kOne, 2, 4);
  ASSERT_EQ(run.reports.size(), 3u);
  EXPECT_EQ(run.reports.front().t, 2u);
  EXPECT_EQ(run.reports.back().t, 4u);
  EXPECT_FALSE(FormatBoundsTable(run.reports).empty());
}

TEST(InclusionExamplesTest, EigenvaluesMatchPublishedValues) {
  for (ExampleId id : {ExampleId::kEx31a, ExampleId::kEx31b}) {
    const DenseBlock dense = ToDense(BuildGershgorinExample(id));
    const auto eig = EigenvaluesSmall(dense);
    const auto published = PublishedEigenvalues(id);
    ASSERT_EQ(eig.size(), published.size());
    for (std::size_t k = 0; k < eig.size(); ++k) {
      EXPECT_NEAR(eig[k].real(), published[k], 5e-4);
      EXPECT_NEAR(eig[k].imag(), 0.0, 1e-10);
      Eigen::MatrixXcd shifted = testing::ToEigen(dense);
      shifted -= eig[k] * Eigen::MatrixXcd::Identity(4, 4);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
      EXPECT_LE(svd.singularValues()(3), 1e-10);
    }
  }
}

TEST(InclusionExamplesTest, CoverageOnCoarseGrid) {
  for (ExampleId id : {ExampleId::kEx31a, ExampleId::kEx31b}) {
    const auto g = BuildGershgorinExample(id);
    const RegionGrid grid = EvalGrid(g, std::nullopt, 200, 200, NormKind::kTwo);
    const ComparisonSummary s = CompareRegions(grid);
    EXPECT_EQ(s.total_violations, 0u);
    EXPECT_LT(s.union_new, s.union_fv);
    for (const auto& c : CheckEigenCoverage(grid, PublishedEigenvalues(id)))
      EXPECT_TRUE(c.covered) << c.eigenvalue << " margin " << c.best_margin_new;
  }
}

TEST(InclusionExamplesTest, WrongKindThrows) {
  EXPECT_THROW(BuildGershgorinExample(ExampleId::kEx21), Error);
  EXPECT_THROW(BuildTridiagonalExample(ExampleId::kEx31a), Error);
}

}  // namespace
}  // namespace blockdom
