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

#include "blockdom/tridiag_inverse.hpp"

#include <algorithm>
#include <string>

namespace blockdom {

namespace {

// Inverse of a named block; the step label feeds SingularError.
DenseBlock InvertStep(const DenseBlock& b, const std::string& step) {
  try {
    return Invert(b);
  } catch (const SingularError& e) {
    throw SingularError(e.pivot_index(), step);
  } catch (const NumericalError&) {
    throw SingularError(0, step);
  }
}

void Guard(const DenseBlock& b, const std::string& name) {
  if (!b.AllFinite() || Norm(b, NormKind::kInfinity) > kRecurrenceGrowthLimit) {
    throw NumericalError(name + ": recurrence growth exceeds 1e150 (matrix far from dominant?)");
  }
}

std::string Label(char block, std::size_t one_based) {
  return std::string(1, block) + "_" + std::to_string(one_based) + " inversion";
}

}  // namespace

InverseFactors IkebeFactors(const BlockTridiagonalMatrix& a) {
  const std::size_t n = a.n();
  const std::size_t m = a.m();
  const DenseBlock identity = DenseBlock::Identity(m);

  // 0-based: A[i] = A_{i+1}, B[i] = B_{i+1}, C[i] = C_{i+1}.
  const auto& A = a.diag();
  const auto& B = a.super();
  const auto& C = a.sub();

  std::vector<DenseBlock> b_inv, c_inv;
  b_inv.reserve(n - 1);
  c_inv.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b_inv.push_back(InvertStep(B[i], Label('B', i + 1)));
    c_inv.push_back(InvertStep(C[i], Label('C', i + 1)));
  }

  InverseFactors f;
  f.U.resize(n);
  f.V.resize(n);
  f.X.resize(n);
  f.Y.resize(n);

  // U_1 = I, U_2 = -B_1^{-1} A_1 U_1, U_i = -B_{i-1}^{-1}(C_{i-2} U_{i-2} + A_{i-1} U_{i-1})
  f.U[0] = identity;
  if (n > 1) f.U[1] = -(b_inv[0] * (A[0] * f.U[0]));
  for (std::size_t i = 2; i < n; ++i) {
    f.U[i] = -(b_inv[i - 1] * (C[i - 2] * f.U[i - 2] + A[i - 1] * f.U[i - 1]));
    Guard(f.U[i], "U_" + std::to_string(i + 1));
  }

  // V_n = (A_n U_n + C_{n-1} U_{n-1})^{-1}, V_{n-1} = -V_n A_n B_{n-1}^{-1},
  // V_i = -(V_{i+1} A_{i+1} + V_{i+2} C_{i+1}) B_i^{-1}
  {
    DenseBlock seed = A[n - 1] * f.U[n - 1];
    if (n > 1) seed += C[n - 2] * f.U[n - 2];
    f.V[n - 1] = InvertStep(seed, "V_n seed inversion");
  }
  if (n > 1) f.V[n - 2] = -(f.V[n - 1] * A[n - 1] * b_inv[n - 2]);
  for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;) {
    f.V[i] = -((f.V[i + 1] * A[i + 1] + f.V[i + 2] * C[i + 1]) * b_inv[i]);
  }

  // X_1 = I, X_2 = -X_1 A_1 C_1^{-1}, X_i = -(X_{i-2} B_{i-2} + X_{i-1} A_{i-1}) C_{i-1}^{-1}
  f.X[0] = identity;
  if (n > 1) f.X[1] = -(f.X[0] * A[0] * c_inv[0]);
  for (std::size_t i = 2; i < n; ++i) {
    f.X[i] = -((f.X[i - 2] * B[i - 2] + f.X[i - 1] * A[i - 1]) * c_inv[i - 1]);
    Guard(f.X[i], "X_" + std::to_string(i + 1));
  }

  // Y_n = (X_n A_n + X_{n-1} B_{n-1})^{-1}, Y_{n-1} = -C_{n-1}^{-1} A_n Y_n,
  // Y_i = -C_i^{-1}(A_{i+1} Y_{i+1} + B_{i+1} Y_{i+2})
  {
    DenseBlock seed = f.X[n - 1] * A[n - 1];
    if (n > 1) seed += f.X[n - 2] * B[n - 2];
    f.Y[n - 1] = InvertStep(seed, "Y_n seed inversion");
  }
  if (n > 1) f.Y[n - 2] = -(c_inv[n - 2] * (A[n - 1] * f.Y[n - 1]));
  for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;) {
    f.Y[i] = -(c_inv[i] * (A[i + 1] * f.Y[i + 1] + B[i + 1] * f.Y[i + 2]));
  }
  return f;
}

BlockInverse AssembleInverse(const InverseFactors& f) {
  const std::size_t n = f.U.size();
  if (n == 0 || f.V.size() != n || f.X.size() != n || f.Y.size() != n) {
    throw DimensionError("AssembleInverse: factor sequences must share a positive length");
  }
  BlockInverse z;
  z.n = n;
  z.m = f.U.front().rows();
  z.Z.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z.Z[i * n + j] = i <= j ? f.U[i] * f.V[j] : f.Y[i] * f.X[j];
    }
    const DenseBlock& uv = z.Z[i * n + i];
    const DenseBlock yx = f.Y[i] * f.X[i];
    const double scale = std::max(1.0, Norm(uv, NormKind::kInfinity));
    z.diagonal_mismatch = std::max(z.diagonal_mismatch, Norm(uv - yx, NormKind::kInfinity) / scale);
  }
  return z;
}

double Residual(const BlockTridiagonalMatrix& a, const BlockInverse& z, NormKind kind) {
  if (z.n != a.n() || z.m != a.m()) throw DimensionError("Residual: inverse and matrix sizes differ");
  DenseBlock product = ToDense(z.AsGeneral()) * ToDense(a);
  for (std::size_t i = 0; i < product.rows(); ++i) product(i, i) -= 1.0;
  return Norm(product, kind);
}

}  // namespace blockdom
