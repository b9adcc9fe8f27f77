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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blockdom/block_matrix.hpp"

namespace blockdom {

/// Defining sums of the two inclusion sets for block row `row` at point z:
///   margin_new = sum_{j != i} ||(A_ii - zI)^{-1} A_ij||
///   margin_fv  = ||(A_ii - zI)^{-1}|| * sum_{j != i} ||A_ij||
/// Both are +inf when A_ii - zI is singular. z belongs to a set when its
/// margin is >= 1.
struct RegionQuery {
  Scalar z;
  std::size_t row = 0;
  double margin_new = 0.0;
  double margin_fv = 0.0;

  bool InNew() const { return margin_new >= 1.0; }
  bool InFv() const { return margin_fv >= 1.0; }
};

std::vector<RegionQuery> MarginsAt(const GeneralBlockMatrix& a, Scalar z, NormKind kind);

struct Box {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
};

/// Box covering every G_i^FV (hence every G_i^new), padded by 10% per side.
/// For a normal diagonal block the covering region is the union of disks
/// around its eigenvalues with radius sum_j ||A_ij||. For a non-normal block
/// the resolvent is only bounded by 1/(|z| - ||A_ii||), so the disk around 0
/// of radius ||A_ii|| + sum_j ||A_ij|| is used instead.
Box AutoBox(const GeneralBlockMatrix& a, NormKind kind);

/// Uniform grid of nx×ny nodes; node (ix, iy) sits at
/// re_min + ix·(re_max - re_min)/(nx - 1), im_min + iy·(im_max - im_min)/(ny - 1).
struct RegionGrid {
  Box box;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t rows = 0;  // number of block rows
  NormKind norm_kind = NormKind::kTwo;
  // margins[(iy * nx + ix) * rows + row]
  std::vector<double> margin_new;
  std::vector<double> margin_fv;

  Scalar Node(std::size_t ix, std::size_t iy) const;
  double MarginNew(std::size_t ix, std::size_t iy, std::size_t row) const {
    return margin_new[(iy * nx + ix) * rows + row];
  }
  double MarginFv(std::size_t ix, std::size_t iy, std::size_t row) const {
    return margin_fv[(iy * nx + ix) * rows + row];
  }
  /// Index pair of the node closest to z (clamped to the box).
  std::pair<std::size_t, std::size_t> NearestNode(Scalar z) const;
};

/// Evaluates MarginsAt at every node. `box` nullopt selects AutoBox. Work is
/// split over up to `threads` workers (0: BLOCKDOM_THREADS or hardware
/// concurrency); node order in the result does not depend on the split.
RegionGrid EvalGrid(const GeneralBlockMatrix& a, std::optional<Box> box, std::size_t nx,
                    std::size_t ny, NormKind kind, std::size_t threads = 0);

struct ComparisonSummary {
  std::vector<std::size_t> count_new;   // per row
  std::vector<std::size_t> count_fv;    // per row
  std::vector<std::size_t> violations;  // nodes in G_i^new but not in G_i^FV
  std::vector<double> area_ratio;       // count_new / count_fv (1 when both empty)
  std::size_t union_new = 0;            // nodes in some G_i^new
  std::size_t union_fv = 0;
  std::size_t total_violations = 0;
  double node_area = 0.0;               // area represented by one node
};

ComparisonSummary CompareRegions(const RegionGrid& grid);

/// Midpoints of grid edges where margin - 1 changes sign, i.e. sampled points
/// of the set boundary for one row. `fv` picks G^FV instead of G^new.
std::vector<Scalar> LevelCrossings(const RegionGrid& grid, std::size_t row, bool fv);

/// "re,im,row,margin_new,margin_fv" with 1-based rows and "inf" for +inf.
std::string RegionGridCsv(const RegionGrid& grid);
std::string ComparisonSummaryJson(const ComparisonSummary& summary, const RegionGrid& grid);

}  // namespace blockdom
