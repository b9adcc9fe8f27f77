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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockdom/decay_bounds.hpp"
#include "blockdom/dominance.hpp"
#include "blockdom/gershgorin.hpp"
#include "blockdom/tridiag_inverse.hpp"

namespace blockdom {

enum class ExampleId { kEx21, kEx22, kEx23, kEx24, kEx31a, kEx31b };

/// "ex2.1" .. "ex2.4", "ex3.1a", "ex3.1b".
ExampleId ParseExampleId(std::string_view name);
std::string_view ToString(ExampleId id);
bool IsBoundsExample(ExampleId id);
/// ex2.3 and ex2.4 draw a random row scaling and need a seed.
bool NeedsSeed(ExampleId id);

/// Block tridiagonal matrices of the bound examples (9 block rows of 9×9).
///   ex2.1: T⊗I + I⊗T with T = tridiag(-1, 2, -1)
///   ex2.2: same with T = tridiag(-110, 209.999, -99.999)
///   ex2.3: ex2.1 with block row i scaled by r_i, r = BuildRandomDiag(9, 1, 10, seed)
///   ex2.4: blocks C = B = tridiag(-0.01, -2, 1), A = tridiag(-2, 10, -2), rows scaled as ex2.3
BlockTridiagonalMatrix BuildTridiagonalExample(ExampleId id, std::uint64_t seed = 0);

/// The 4×4 matrices with 2×2 blocks used for the inclusion regions.
GeneralBlockMatrix BuildGershgorinExample(ExampleId id);

/// Published eigenvalues (five significant digits) of ex3.1a / ex3.1b.
std::vector<double> PublishedEigenvalues(ExampleId id);

/// Published maxima of E^u (over i != j) and E^l per refinement step.
struct GoldenEntry {
  std::size_t t;
  double max_e_upper;
  bool upper_is_tiny;  // printed in scientific notation; checked as <= kTinyBound
  double max_e_lower;
};

inline constexpr double kGoldenTolerance = 5e-4;
inline constexpr double kTinyBound = 1e-10;

/// Entries exist only for ex2.1 and ex2.2.
std::vector<GoldenEntry> GoldenTable(ExampleId id);

struct BoundsRun {
  BlockTridiagonalMatrix matrix;
  NormKind norm_kind = NormKind::kTwo;
  DominanceReport dominance;
  bool corner_conditions = false;  // ||A_1^{-1}B_1|| < 1 and ||A_n^{-1}C_{n-1}|| < 1
  BlockInverse inverse;
  double residual = 0.0;  // ||ZA - I|| in norm_kind
  TauOmegaTable table;
  std::vector<BoundsReport> reports;  // one per requested t
};

/// check -> invert -> tau/omega -> bounds for t in [t_first, t_last]
/// (t_last == 0 means n - 1). Throws DominanceViolation when the matrix is
/// not row block dominant or the corner conditions fail.
BoundsRun RunBounds(const BlockTridiagonalMatrix& a, NormKind kind, std::size_t t_first = 1,
                    std::size_t t_last = 0, BoundAnchor anchor = BoundAnchor::kComputedDiagonal);

struct GoldenComparison {
  std::size_t t;
  std::string quantity;  // "max_Eu" or "max_El"
  double expected;
  double computed;
  std::string rule;  // "abs<=5e-4" or "<=1e-10"
  bool pass;
};

std::vector<GoldenComparison> CompareGolden(const BoundsRun& run, ExampleId id);

/// Number of (i,j) where u_ij < ||Z_ij|| - tol, plus diagonal rows with l_i > ||Z_ii|| + tol.
std::size_t CountBoundViolations(const BoundsReport& report, double tol = 1e-10);
/// Number of (i,j) where u_ij at `next` exceeds u_ij at `prev` by more than
/// slack·max(1, u_prev), plus diagonals whose validity flag regresses.
std::size_t CountMonotonicityViolations(const BoundsReport& prev, const BoundsReport& next,
                                        double slack = 1e-12);

/// Largest |difference| between corresponding tau and omega entries.
double MaxTableDifference(const TauOmegaTable& a, const TauOmegaTable& b);

struct EigenCoverage {
  double eigenvalue;
  std::size_t ix, iy;
  double best_margin_new;  // max over rows at the nearest node
  bool covered;
};

/// Each eigenvalue must have margin_new >= 1 - tol in some row at its nearest node.
std::vector<EigenCoverage> CheckEigenCoverage(const RegionGrid& grid,
                                              const std::vector<double>& eigenvalues,
                                              double tol = 1e-6);

/// Two-row text table of max E^u / max E^l, one column per t.
std::string FormatBoundsTable(const std::vector<BoundsReport>& reports);

}  // namespace blockdom
