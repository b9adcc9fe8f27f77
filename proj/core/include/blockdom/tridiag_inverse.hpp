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

#pragma once

#include <vector>

#include "blockdom/block_matrix.hpp"

namespace blockdom {

/// The four block sequences describing A^{-1} for a block tridiagonal A with
/// nonsingular off-diagonal blocks: Z_ij = U_i V_j for i <= j and
/// Z_ij = Y_i X_j for i >= j. All sequences are 0-based (U[0] is U_1).
struct InverseFactors {
  std::vector<DenseBlock> U;
  std::vector<DenseBlock> V;
  std::vector<DenseBlock> X;
  std::vector<DenseBlock> Y;
};

/// Dense n×n grid of inverse blocks.
struct BlockInverse {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<DenseBlock> Z;  // row-major, Z[i * n + j]
  /// max_i ||U_i V_i - Y_i X_i||_inf / max(1, ||U_i V_i||_inf)
  double diagonal_mismatch = 0.0;

  const DenseBlock& Block(std::size_t i, std::size_t j) const { return Z.at(i * n + j); }
  GeneralBlockMatrix AsGeneral() const { return GeneralBlockMatrix(n, Z); }
};

/// Any intermediate ||U_i||_inf or ||X_i||_inf above this aborts the recurrences.
inline constexpr double kRecurrenceGrowthLimit = 1e150;

/// Forward recurrences for U and X, backward recurrences for V and Y, in the
/// order they are defined. Throws SingularError whose step() names the failing
/// inversion ("B_3 inversion", "V_n seed inversion", ...) and NumericalError
/// when the growth guard trips.
InverseFactors IkebeFactors(const BlockTridiagonalMatrix& a);

BlockInverse AssembleInverse(const InverseFactors& f);

inline BlockInverse InvertBlockTridiagonal(const BlockTridiagonalMatrix& a) {
  return AssembleInverse(IkebeFactors(a));
}

/// ||Z·A - I|| for the densified product.
double Residual(const BlockTridiagonalMatrix& a, const BlockInverse& z, NormKind kind);

}  // namespace blockdom
