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

#include "blockdom/tridiag_inverse.hpp"
#include "test_support.hpp"

namespace blockdom {
namespace {

using testing::Generator;
using testing::MaxAbsDiff;

BlockTridiagonalMatrix ScalarTridiag(std::size_t n, double sub, double diag, double super) {
  return TridiagonalFromDense(BuildTridiagToeplitz(n, sub, diag, super), 1);
}

TEST(IkebeTest, SingleBlockIsPlainInverse) {
  const DenseBlock a = DenseBlock::FromRows({{2, -1}, {-1, 2}});
  const BlockInverse z = InvertBlockTridiagonal(BlockTridiagonalMatrix({a}, {}, {}));
  ASSERT_EQ(z.n, 1u);
  EXPECT_LE(MaxAbsDiff(z.Block(0, 0), testing::OracleInverse(a)), 1e-15);
}

TEST(IkebeTest, ScalarSecondDifferenceInverse) {
  const BlockInverse z = InvertBlockTridiagonal(ScalarTridiag(3, -1.0, 2.0, -1.0));
  const double expected[3][3] = {{3, 2, 1}, {2, 4, 2}, {1, 2, 3}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_NEAR(std::abs(z.Block(i, j)(0, 0) - expected[i][j] / 4.0), 0.0, 1e-14);
}

TEST(IkebeTest, SymmetricInputGivesSymmetricInverse) {
  const auto a = KronSum(BuildTridiagToeplitz(9, -1.0, 2.0, -1.0));
  const BlockInverse z = InvertBlockTridiagonal(a);
  const DenseBlock d = ToDense(z.AsGeneral());
  EXPECT_LE(MaxAbsDiff(d, d.Transpose()), 1e-9);
  EXPECT_LE(Residual(a, z, NormKind::kTwo), 1e-8);
}

TEST(IkebeTest, MatchesDenseOracle) {
  Generator gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const NormKind k = kAllNormKinds[trial % 4];
    const auto a = gen.DominantTridiagonal(gen.Index(1, 7), gen.Index(1, 4), k, gen.Coin());
    const BlockInverse z = InvertBlockTridiagonal(a);
    const DenseBlock oracle = testing::OracleInverse(ToDense(a));
    const DenseBlock mine = ToDense(z.AsGeneral());
    EXPECT_LE(MaxAbsDiff(mine, oracle), 1e-9 * (1.0 + oracle.MaxAbs()));
    EXPECT_LE(z.diagonal_mismatch, 1e-9);
  }
}

TEST(IkebeTest, FactorsReproduceBothTriangles) {
  Generator gen(22);
  const auto a = gen.DominantTridiagonal(5, 2, NormKind::kTwo, true);
  const InverseFactors f = IkebeFactors(a);
  const BlockInverse z = AssembleInverse(f);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(f.U[0], DenseBlock::Identity(2));
    EXPECT_LE(MaxAbsDiff(f.U[i] * f.V[i], f.Y[i] * f.X[i]), 1e-10);
    for (std::size_t j = 0; j < 5; ++j) {
      const DenseBlock expected = i <= j ? f.U[i] * f.V[j] : f.Y[i] * f.X[j];
      EXPECT_EQ(z.Block(i, j), expected);
    }
  }
}

TEST(IkebeTest, SingularSuperBlockNamesStep) {
  auto base = ScalarTridiag(3, -1.0, 4.0, -1.0);
  std::vector<DenseBlock> super(base.super().begin(), base.super().end());
  super[0] = DenseBlock::Zero(1);
  const BlockTridiagonalMatrix a(std::vector<DenseBlock>(base.diag().begin(), base.diag().end()),
                                 super,
                                 std::vector<DenseBlock>(base.sub().begin(), base.sub().end()));
  try {
    IkebeFactors(a);
    FAIL() << "expected SingularError";
  } catch (const SingularError& e) {
    EXPECT_EQ(e.step(), "B_1 inversion");
  }
}

TEST(IkebeTest, SingularSubBlockNamesStep) {
  auto base = ScalarTridiag(3, -1.0, 4.0, -1.0);
  std::vector<DenseBlock> sub(base.sub().begin(), base.sub().end());
  sub[1] = DenseBlock::Zero(1);
  const BlockTridiagonalMatrix a(std::vector<DenseBlock>(base.diag().begin(), base.diag().end()),
                                 std::vector<DenseBlock>(base.super().begin(), base.super().end()),
                                 sub);
  try {
    IkebeFactors(a);
    FAIL() << "expected SingularError";
  } catch (const SingularError& e) {
    EXPECT_EQ(e.step(), "C_2 inversion");
  }
}

TEST(IkebeTest, SingularMatrixFailsAtSeed) {
  // tridiag(1, 2, 1) of size 3 is nonsingular, but [[1,1],[1,1]] is not.
  const auto a = ScalarTridiag(2, 1.0, 1.0, 1.0);
  EXPECT_THROW(IkebeFactors(a), SingularError);
}

TEST(ResidualTest, ZeroForExactInverse) {
  const auto a = ScalarTridiag(3, -1.0, 2.0, -1.0);
  const BlockInverse z = InvertBlockTridiagonal(a);
  for (NormKind k : kAllNormKinds) EXPECT_LE(Residual(a, z, k), 1e-14);
}

}  // namespace
}  // namespace blockdom
