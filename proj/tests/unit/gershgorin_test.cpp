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
#include <numbers>

#include "blockdom/experiments.hpp"
#include "blockdom/gershgorin.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace blockdom {
namespace {

using testing::Generator;

GeneralBlockMatrix Ex31a() { return BuildGershgorinExample(ExampleId::kEx31a); }

TEST(MarginsTest, HandValueAtFour) {
  const auto q = MarginsAt(Ex31a(), Scalar(4.0), NormKind::kTwo);
  ASSERT_EQ(q.size(), 2u);
  // (A_11 - 4I)^{-1} A_12 = [[0, 1/2], [1/2, -1/2]], whose two-norm is phi / 2.
  EXPECT_NEAR(q[0].margin_new, std::numbers::phi / 2.0, 1e-12);
  EXPECT_NEAR(q[0].margin_new, 0.8090, 5e-5);
  EXPECT_FALSE(q[0].InNew());
  EXPECT_LE(q[0].margin_new, q[0].margin_fv + 1e-12);
}

TEST(MarginsTest, SingularShiftIsInfinite) {
  // 2 is an eigenvalue of A_11 = [[4, -2], [-2, 4]].
  const auto q = MarginsAt(Ex31a(), Scalar(2.0), NormKind::kTwo);
  EXPECT_TRUE(std::isinf(q[0].margin_new));
  EXPECT_TRUE(std::isinf(q[0].margin_fv));
  EXPECT_TRUE(q[0].InNew());
  EXPECT_TRUE(q[0].InFv());
}

TEST(MarginsTest, FarPointIsOutside) {
  for (NormKind k : kAllNormKinds)
    for (const auto& q : MarginsAt(Ex31a(), Scalar(100.0, 3.0), k)) {
      EXPECT_LT(q.margin_new, 1.0);
      EXPECT_LT(q.margin_fv, 1.0);
    }
}

TEST(MarginsTest, ScalarBlocksReduceToDisks) {
  Generator gen(41);
  const auto g = gen.General(4, 1, true, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar z(gen.Uniform(-6, 6), gen.Uniform(-6, 6));
    const auto q = MarginsAt(g, z, NormKind::kTwo);
    for (std::size_t i = 0; i < 4; ++i) {
      double radius = 0.0;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) radius += std::abs(g.Block(i, j)(0, 0));
      const double expected = radius / std::abs(g.Block(i, i)(0, 0) - z);
      EXPECT_NEAR(q[i].margin_new, expected, 1e-12 * (1.0 + expected));
      EXPECT_NEAR(q[i].margin_fv, expected, 1e-12 * (1.0 + expected));
    }
  }
}

TEST(MarginsTest, NewMarginNeverExceedsFv) {
  Generator gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    const NormKind k = kAllNormKinds[trial % 4];
    const auto g = gen.General(3, 2, true, 1.0);
    const Scalar z(gen.Uniform(-3, 3), gen.Uniform(-3, 3));
    for (const auto& q : MarginsAt(g, z, k)) EXPECT_LE(q.margin_new, q.margin_fv * (1 + 1e-12));
  }
}

TEST(AutoBoxTest, CoversSpectrum) {
  for (ExampleId id : {ExampleId::kEx31a, ExampleId::kEx31b}) {
    const auto g = BuildGershgorinExample(id);
    for (NormKind k : kAllNormKinds) {
      const Box box = AutoBox(g, k);
      for (Scalar lambda : EigenvaluesSmall(ToDense(g))) {
        EXPECT_GE(lambda.real(), box.re_min);
        EXPECT_LE(lambda.real(), box.re_max);
        EXPECT_GE(lambda.imag(), box.im_min);
        EXPECT_LE(lambda.imag(), box.im_max);
      }
      EXPECT_GT(box.im_max - box.im_min, 0.0);
    }
  }
}

TEST(AutoBoxTest, DegenerateDiagonalGetsArea) {
  GeneralBlockMatrix g(2, 1);
  g.SetBlock(0, 0, DenseBlock::FromRows({{1}}));
  g.SetBlock(1, 1, DenseBlock::FromRows({{1}}));
  const Box box = AutoBox(g, NormKind::kTwo);
  EXPECT_GT(box.re_max - box.re_min, 0.0);
  EXPECT_GT(box.im_max - box.im_min, 0.0);
}

TEST(GridTest, NodesSpanBox) {
  const RegionGrid grid = EvalGrid(Ex31a(), Box{0, 8, -2, 2}, 5, 3, NormKind::kTwo, 1);
  EXPECT_EQ(grid.Node(0, 0), Scalar(0, -2));
  EXPECT_EQ(grid.Node(4, 2), Scalar(8, 2));
  EXPECT_EQ(grid.Node(2, 1), Scalar(4, 0));
  EXPECT_EQ(grid.NearestNode(Scalar(4.1, 0.2)), std::make_pair(std::size_t{2}, std::size_t{1}));
  EXPECT_EQ(grid.NearestNode(Scalar(-9, 9)), std::make_pair(std::size_t{0}, std::size_t{2}));
  EXPECT_NEAR(grid.MarginNew(2, 1, 0), std::numbers::phi / 2.0, 1e-12);
}

TEST(GridTest, ThreadCountDoesNotChangeResult) {
  const auto g = BuildGershgorinExample(ExampleId::kEx31b);
  const RegionGrid one = EvalGrid(g, std::nullopt, 41, 37, NormKind::kTwo, 1);
  const RegionGrid many = EvalGrid(g, std::nullopt, 41, 37, NormKind::kTwo, 5);
  EXPECT_EQ(one.margin_new, many.margin_new);
  EXPECT_EQ(one.margin_fv, many.margin_fv);
}

TEST(GridTest, RejectsBadShapes) {
  EXPECT_THROW(EvalGrid(Ex31a(), Box{0, 1, 0, 1}, 1, 5, NormKind::kTwo), Error);
  EXPECT_THROW(EvalGrid(Ex31a(), Box{1, 1, 0, 1}, 5, 5, NormKind::kTwo), Error);
}

TEST(CompareTest, NewRegionInsideFvRegion) {
  for (NormKind k : kAllNormKinds) {
    const RegionGrid grid = EvalGrid(Ex31a(), std::nullopt, 120, 80, k);
    const ComparisonSummary s = CompareRegions(grid);
    EXPECT_EQ(s.total_violations, 0u);
    EXPECT_LE(s.union_new, s.union_fv);
    for (std::size_t r = 0; r < 2; ++r) EXPECT_LE(s.count_new[r], s.count_fv[r]);
  }
}

TEST(CompareTest, CountsMatchDirectScan) {
  const RegionGrid grid = EvalGrid(Ex31a(), Box{0, 9, -3, 3}, 30, 20, NormKind::kTwo);
  const ComparisonSummary s = CompareRegions(grid);
  std::size_t union_new = 0;
  for (std::size_t iy = 0; iy < 20; ++iy)
    for (std::size_t ix = 0; ix < 30; ++ix)
      if (grid.MarginNew(ix, iy, 0) >= 1.0 || grid.MarginNew(ix, iy, 1) >= 1.0) ++union_new;
  EXPECT_EQ(s.union_new, union_new);
  EXPECT_NEAR(s.node_area, 9.0 / 29.0 * 6.0 / 19.0, 1e-14);
}

TEST(CrossingsTest, BoundaryPointsSitNearLevelOne) {
  const RegionGrid grid = EvalGrid(Ex31a(), Box{0, 9, -3, 3}, 181, 121, NormKind::kTwo);
  const auto pts = LevelCrossings(grid, 0, false);
  ASSERT_FALSE(pts.empty());
  for (Scalar z : pts) {
    const double margin = MarginsAt(Ex31a(), z, NormKind::kTwo)[0].margin_new;
    EXPECT_NEAR(margin, 1.0, 0.25) << z;
  }
}

TEST(GridOutputTest, CsvAndJson) {
  const RegionGrid grid = EvalGrid(Ex31a(), Box{0, 8, -2, 2}, 3, 2, NormKind::kTwo);
  const std::string csv = RegionGridCsv(grid);
  EXPECT_EQ(csv.rfind("re,im,row,margin_new,margin_fv\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 3 * 2 * 2);
  const auto doc = nlohmann::json::parse(ComparisonSummaryJson(CompareRegions(grid), grid));
  EXPECT_EQ(doc["nx"], 3);
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["norm"], "two");
}

}  // namespace
}  // namespace blockdom
