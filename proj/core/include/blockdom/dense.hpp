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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "blockdom/errors.hpp"

namespace blockdom {

using Scalar = std::complex<double>;

enum class NormKind { kOne, kInfinity, kFrobenius, kTwo };

std::string_view ToString(NormKind kind);
/// Accepts "one", "inf", "fro", "two".
NormKind ParseNormKind(std::string_view name);

inline constexpr NormKind kAllNormKinds[] = {NormKind::kOne, NormKind::kInfinity,
                                             NormKind::kFrobenius, NormKind::kTwo};

/// Dense row-major matrix of complex doubles. Blocks of every block matrix in
/// this library are square, but rectangular shapes are allowed so the kernels
/// can also serve column vectors and densified block rows.
class DenseBlock {
 public:
  DenseBlock() = default;
  DenseBlock(std::size_t rows, std::size_t cols);
  DenseBlock(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  /// Real row-major initializer, e.g. DenseBlock::FromRows({{2, -1}, {-1, 2}}).
  static DenseBlock FromRows(std::initializer_list<std::initializer_list<double>> rows);

  static DenseBlock Identity(std::size_t m);
  static DenseBlock Zero(std::size_t m) { return DenseBlock(m, m); }
  static DenseBlock Diagonal(std::span<const Scalar> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Scalar operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  DenseBlock ConjugateTranspose() const;
  DenseBlock Transpose() const;
  /// Largest entry modulus.
  double MaxAbs() const;
  bool AllFinite() const;

  DenseBlock& operator+=(const DenseBlock& other);
  DenseBlock& operator-=(const DenseBlock& other);
  DenseBlock& operator*=(Scalar s);

  friend bool operator==(const DenseBlock&, const DenseBlock&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

DenseBlock operator+(DenseBlock a, const DenseBlock& b);
DenseBlock operator-(DenseBlock a, const DenseBlock& b);
DenseBlock operator-(DenseBlock a);
DenseBlock operator*(Scalar s, DenseBlock a);
/// Same as Matmul.
DenseBlock operator*(const DenseBlock& a, const DenseBlock& b);

inline constexpr double kDefaultPivotTolerance = 1e-13;

/// Row-pivoted LU factors: P·A = L·U with unit lower L. Both triangles are
/// packed into `lu`; perm[k] is the original row moved to position k.
struct LUFactors {
  DenseBlock lu;
  std::vector<std::size_t> perm;
  bool swapped = false;

  std::size_t size() const noexcept { return lu.rows(); }
  DenseBlock Lower() const;
  DenseBlock Upper() const;
  DenseBlock Permutation() const;
  /// Solves A·X = B for a block right-hand side.
  DenseBlock Solve(const DenseBlock& rhs) const;
};

/// Partial pivoting. A pivot whose modulus is <= pivot_tolerance times the
/// largest entry modulus of `block` is treated as zero.
LUFactors LuFactor(const DenseBlock& block, double pivot_tolerance = kDefaultPivotTolerance);

DenseBlock Invert(const DenseBlock& block, double pivot_tolerance = kDefaultPivotTolerance);

/// Triple-loop product.
DenseBlock Matmul(const DenseBlock& a, const DenseBlock& b);

double Norm(const DenseBlock& block, NormKind kind);

/// Norm of the m×m identity: sqrt(m) under Frobenius, 1 otherwise.
double IdentityNorm(std::size_t m, NormKind kind);

/// Spectral norm helpers, exposed for testing the two routes separately.
namespace spectral {

struct PowerResult {
  double sigma = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kPowerTolerance = 1e-13;
inline constexpr int kPowerMaxIterations = 10000;

/// Power iteration on the Gram matrix A^H·A from the normalized all-ones
/// vector; stops once successive Rayleigh quotients agree to `tolerance`.
PowerResult PowerIteration(const DenseBlock& block, double tolerance = kPowerTolerance,
                           int max_iterations = kPowerMaxIterations);

/// All singular values via cyclic one-sided Jacobi, descending.
std::vector<double> JacobiSingularValues(const DenseBlock& block);

/// True when sigma^2·(1 + slack) dominates every eigenvalue of A^H·A,
/// checked by a Cholesky factorization of the shifted Gram matrix.
bool DominatesGram(const DenseBlock& block, double sigma, double slack = 1e-10);

}  // namespace spectral

/// Eigenvalues of a small square block (m <= 64) sorted by real part then
/// imaginary part.
std::vector<Scalar> EigenvaluesSmall(const DenseBlock& block, int max_iter = 100);

}  // namespace blockdom
