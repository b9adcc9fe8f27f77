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
#include <cstdint>
#include <span>
#include <vector>

#include "blockdom/dense.hpp"

namespace blockdom {

/// Block tridiagonal matrix with diagonal blocks A_1..A_n, superdiagonal
/// blocks B_1..B_{n-1} and subdiagonal blocks C_1..C_{n-1}. Indices in the
/// accessors are 0-based: Diag(i) is A_{i+1}.
class BlockTridiagonalMatrix {
 public:
  BlockTridiagonalMatrix(std::vector<DenseBlock> diag, std::vector<DenseBlock> super,
                         std::vector<DenseBlock> sub);

  std::size_t n() const noexcept { return diag_.size(); }
  std::size_t m() const noexcept { return diag_.front().rows(); }

  const DenseBlock& Diag(std::size_t i) const { return diag_.at(i); }
  const DenseBlock& Super(std::size_t i) const { return super_.at(i); }
  const DenseBlock& Sub(std::size_t i) const { return sub_.at(i); }

  std::span<const DenseBlock> diag() const noexcept { return diag_; }
  std::span<const DenseBlock> super() const noexcept { return super_; }
  std::span<const DenseBlock> sub() const noexcept { return sub_; }

  friend bool operator==(const BlockTridiagonalMatrix&, const BlockTridiagonalMatrix&) = default;

 private:
  std::vector<DenseBlock> diag_;
  std::vector<DenseBlock> super_;
  std::vector<DenseBlock> sub_;
};

/// n×n grid of uniform m×m blocks, stored row-major.
class GeneralBlockMatrix {
 public:
  GeneralBlockMatrix(std::size_t n, std::size_t m);
  GeneralBlockMatrix(std::size_t n, std::vector<DenseBlock> blocks);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  const DenseBlock& Block(std::size_t i, std::size_t j) const { return blocks_.at(i * n_ + j); }
  void SetBlock(std::size_t i, std::size_t j, DenseBlock block);

  friend bool operator==(const GeneralBlockMatrix&, const GeneralBlockMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<DenseBlock> blocks_;
};

GeneralBlockMatrix ToGeneral(const BlockTridiagonalMatrix& a);

DenseBlock ToDense(const BlockTridiagonalMatrix& a);
DenseBlock ToDense(const GeneralBlockMatrix& a);

/// Cuts a dense matrix into m×m blocks.
GeneralBlockMatrix GeneralFromDense(const DenseBlock& dense, std::size_t m);
/// Requires every block outside the tridiagonal band to be exactly zero.
BlockTridiagonalMatrix TridiagonalFromDense(const DenseBlock& dense, std::size_t m);

/// k×k Toeplitz tridiagonal matrix tridiag(sub, diag, super).
DenseBlock BuildTridiagToeplitz(std::size_t k, Scalar sub, Scalar diag, Scalar super);

/// T⊗I + I⊗T for a tridiagonal Toeplitz T, cut into k×k blocks.
BlockTridiagonalMatrix KronSum(const DenseBlock& t);

/// Block tridiagonal Toeplitz matrix with n block rows whose blocks are
/// themselves m×m tridiagonal Toeplitz stencils.
struct Stencil {
  Scalar sub;
  Scalar diag;
  Scalar super;
};
BlockTridiagonalMatrix BuildBlockTridiagToeplitz(std::size_t n, std::size_t m, Stencil sub_block,
                                                 Stencil diag_block, Stencil super_block);

/// Block row i multiplied by r[i], i.e. (diag(r)⊗I)·a.
BlockTridiagonalMatrix LeftScaleBlockRows(const BlockTridiagonalMatrix& a,
                                          std::span<const Scalar> r);
/// Block row i premultiplied by the m×m block s[i].
BlockTridiagonalMatrix LeftScaleBlockRows(const BlockTridiagonalMatrix& a,
                                          std::span<const DenseBlock> s);

/// n integers uniform on [lo, hi], drawn from std::mt19937_64 seeded with
/// `seed`. Each draw takes 64-bit outputs x and rejects x >= 2^64 - (2^64 mod
/// span), returning lo + x mod span. Both the engine and the rejection rule
/// are fully specified, so the sequence is reproducible in any language.
std::vector<Scalar> BuildRandomDiag(std::size_t n, std::int64_t lo, std::int64_t hi,
                                    std::uint64_t seed);

}  // namespace blockdom
