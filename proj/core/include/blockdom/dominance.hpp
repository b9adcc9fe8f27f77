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

#include <string>
#include <variant>
#include <vector>

#include "blockdom/block_matrix.hpp"

namespace blockdom {

/// Per-row dominance sums for a block matrix under one norm.
///
/// row_sums[i] is the sum over j != i of ||A_ii^{-1} A_ij||. fv_row_margins[i]
/// is sum_j ||A_ij|| - 1/||A_ii^{-1}||, so the Feingold-Varga condition holds
/// in row i when the margin is <= 0. Rows whose diagonal block is singular
/// carry +inf in both and `singular_rows[i] == true`.
struct DominanceReport {
  std::vector<double> row_sums;
  std::vector<double> fv_row_margins;
  std::vector<bool> singular_rows;
  bool dominant = false;
  bool strict = false;
  bool fv_dominant = false;
  NormKind norm_kind = NormKind::kTwo;
};

DominanceReport CheckRowBlockDominance(const GeneralBlockMatrix& a, NormKind kind);
/// Only the at most two off-diagonal blocks per row enter the sums.
DominanceReport CheckRowBlockDominance(const BlockTridiagonalMatrix& a, NormKind kind);

/// Same report; callers read fv_row_margins / fv_dominant.
DominanceReport CheckFvDominance(const GeneralBlockMatrix& a, NormKind kind);

/// Column variant, evaluated as the row check of the block transpose
/// (block (i,j) of the result is A_ji^T).
DominanceReport CheckColumnBlockDominance(const GeneralBlockMatrix& a, NormKind kind);

/// Strict row block dominance proves nonsingularity.
struct Certificate {
  DominanceReport report;
};
struct Inconclusive {
  DominanceReport report;
  std::string reason;
};
using NonsingularityVerdict = std::variant<Certificate, Inconclusive>;

NonsingularityVerdict CertifyNonsingular(const GeneralBlockMatrix& a, NormKind kind);

std::string DominanceReportJson(const DominanceReport& report);

}  // namespace blockdom
