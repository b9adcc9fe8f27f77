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
#include <string>
#include <vector>

#include "blockdom/block_matrix.hpp"
#include "blockdom/tridiag_inverse.hpp"

namespace blockdom {

/// Norm data of a block tridiagonal matrix that the bound recurrences need.
/// Index i is the 0-based block row; the boundary blocks C_0 and B_n are zero.
struct RowCoefficients {
  std::vector<double> inv_a_b;   // ||A_i^{-1} B_i||
  std::vector<double> inv_a_c;   // ||A_i^{-1} C_{i-1}||
  std::vector<double> norm_a;    // ||A_i||
  std::vector<double> norm_inv_a;  // ||A_i^{-1}||
  std::vector<double> norm_b;    // ||B_i||
  std::vector<double> norm_c;    // ||C_{i-1}||
  double identity_norm = 1.0;
  NormKind norm_kind = NormKind::kTwo;
};

RowCoefficients ComputeRowCoefficients(const BlockTridiagonalMatrix& a, NormKind kind);

/// Refined coefficients tau_{i,t} and omega_{i,t} for t = 1..t_max.
class TauOmegaTable {
 public:
  TauOmegaTable(RowCoefficients coefficients, std::vector<std::vector<double>> tau,
                std::vector<std::vector<double>> omega);

  std::size_t n() const noexcept { return coefficients_.norm_a.size(); }
  std::size_t t_max() const noexcept { return tau_.size(); }
  NormKind norm_kind() const noexcept { return coefficients_.norm_kind; }
  const RowCoefficients& coefficients() const noexcept { return coefficients_; }

  /// row is 0-based, step is 1-based. Rows outside [0, n) read as zero, which
  /// realizes tau_{0,t} = omega_{n+1,t} = 0.
  double Tau(std::ptrdiff_t row, std::size_t step) const;
  double Omega(std::ptrdiff_t row, std::size_t step) const;

  /// max_i tau_{i,t} and max_i omega_{i,t}.
  double Rho1(std::size_t step) const;
  double Rho2(std::size_t step) const;

 private:
  void RequireStep(std::size_t step) const;

  RowCoefficients coefficients_;
  std::vector<std::vector<double>> tau_;    // [t-1][i]
  std::vector<std::vector<double>> omega_;  // [t-1][i]
};

/// t_max == 0 selects max(n - 1, 1). Throws DominanceViolation naming the
/// (1-based) row whose recurrence denominator is <= 0.
TauOmegaTable ComputeTauOmega(const BlockTridiagonalMatrix& a, NormKind kind,
                              std::size_t t_max = 0);

/// L_i, T_i (valid for rows 0..n-2) and M_i, W_i (valid for rows 1..n-1).
/// Entries outside the valid range are empty blocks.
struct ChainFactors {
  std::vector<DenseBlock> L;
  std::vector<DenseBlock> T;
  std::vector<DenseBlock> M;
  std::vector<DenseBlock> W;
};

ChainFactors ComputeChains(const BlockTridiagonalMatrix& a);

/// U_i = -L_i U_{i+1} started from U_n, and Y_i = -M_i Y_{i-1} started from Y_1.
std::vector<DenseBlock> ReconstructU(const ChainFactors& chains, const DenseBlock& last_u);
std::vector<DenseBlock> ReconstructY(const ChainFactors& chains, const DenseBlock& first_y);

enum class BoundAnchor {
  /// Off-diagonal products are anchored at the computed ||Z_jj||.
  kComputedDiagonal,
  /// Off-diagonal products are anchored at the diagonal upper bound u_jj,
  /// so no inverse is needed for the bounds themselves. Relative errors are
  /// still reported against the supplied inverse.
  kAPrioriDiagonal,
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t t = 1;
  BoundAnchor anchor = BoundAnchor::kComputedDiagonal;
  std::vector<double> norm_z;     // ||Z_ij||, row-major
  std::vector<double> upper;      // u_ij, +inf where invalid
  std::vector<bool> upper_valid;  // false where u_ij is the +inf sentinel
  std::vector<double> e_upper;    // E^u_ij, NaN where upper is invalid
  std::vector<double> lower_diag;
  std::vector<double> e_lower;
  std::vector<double> denominators;  // diagonal upper-bound denominators
  double rho1 = 0.0;
  double rho2 = 0.0;
  double max_e_upper = 0.0;  // over valid i != j
  double max_e_lower = 0.0;

  double Upper(std::size_t i, std::size_t j) const { return upper.at(i * n + j); }
  double NormZ(std::size_t i, std::size_t j) const { return norm_z.at(i * n + j); }
  double EUpper(std::size_t i, std::size_t j) const { return e_upper.at(i * n + j); }
  bool DiagonalValid(std::size_t i) const { return upper_valid.at(i * n + i); }
};

BoundsReport ComputeBounds(const BlockTridiagonalMatrix& a, const BlockInverse& z,
                           const TauOmegaTable& table, std::size_t t,
                           BoundAnchor anchor = BoundAnchor::kComputedDiagonal);

struct EnvelopeEntry {
  std::size_t i;
  std::size_t j;
  double value;
};

/// rho1^{j-i} ||Z_jj|| above the diagonal and rho2^{i-j} ||Z_jj|| below it.
std::vector<EnvelopeEntry> DecayEnvelope(const TauOmegaTable& table, std::size_t t,
                                         const std::vector<double>& z_diag_norms);

/// One row per (i,j): i,j,norm_Zij,u_ij,valid_flag,E_u (1-based indices).
std::string BoundsCsv(const BoundsReport& report);
/// {"t","max_Eu","max_El","rho1","rho2"}.
std::string BoundsSummaryJson(const BoundsReport& report);

}  // namespace blockdom
