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

#include "blockdom/block_matrix.hpp"

#include <limits>
#include <random>
#include <string>

namespace blockdom {

namespace {

void RequireSquare(const DenseBlock& b, std::size_t m, const std::string& what) {
  if (b.rows() != m || b.cols() != m) {
    throw DimensionError(what + ": expected " + std::to_string(m) + "x" + std::to_string(m) +
                         " block, got " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

BlockTridiagonalMatrix::BlockTridiagonalMatrix(std::vector<DenseBlock> diag,
                                               std::vector<DenseBlock> super,
                                               std::vector<DenseBlock> sub)
    : diag_(std::move(diag)), super_(std::move(super)), sub_(std::move(sub)) {
  if (diag_.empty()) throw DimensionError("BlockTridiagonalMatrix: n must be positive");
  const std::size_t n = diag_.size();
  const std::size_t m = diag_.front().rows();
  if (m == 0) throw DimensionError("BlockTridiagonalMatrix: m must be positive");
  if (super_.size() != n - 1) {
    throw DimensionError("super: expected " + std::to_string(n - 1) + " blocks, got " +
                         std::to_string(super_.size()));
  }
  if (sub_.size() != n - 1) {
    throw DimensionError("sub: expected " + std::to_string(n - 1) + " blocks, got " +
                         std::to_string(sub_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) RequireSquare(diag_[i], m, "diag[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RequireSquare(super_[i], m, "super[" + std::to_string(i) + "]");
    RequireSquare(sub_[i], m, "sub[" + std::to_string(i) + "]");
  }
}

GeneralBlockMatrix::GeneralBlockMatrix(std::size_t n, std::size_t m)
    : n_(n), m_(m), blocks_(n * n, DenseBlock::Zero(m)) {
  if (n == 0 || m == 0) throw DimensionError("GeneralBlockMatrix: n and m must be positive");
}

GeneralBlockMatrix::GeneralBlockMatrix(std::size_t n, std::vector<DenseBlock> blocks)
    : n_(n), m_(0), blocks_(std::move(blocks)) {
  if (n == 0 || blocks_.size() != n * n) {
    throw DimensionError("GeneralBlockMatrix: expected " + std::to_string(n * n) + " blocks");
  }
  m_ = blocks_.front().rows();
  if (m_ == 0) throw DimensionError("GeneralBlockMatrix: m must be positive");
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    RequireSquare(blocks_[k], m_,
                  "grid[" + std::to_string(k / n) + "][" + std::to_string(k % n) + "]");
  }
}

void GeneralBlockMatrix::SetBlock(std::size_t i, std::size_t j, DenseBlock block) {
  RequireSquare(block, m_, "SetBlock");
  blocks_.at(i * n_ + j) = std::move(block);
}

GeneralBlockMatrix ToGeneral(const BlockTridiagonalMatrix& a) {
  GeneralBlockMatrix g(a.n(), a.m());
  for (std::size_t i = 0; i < a.n(); ++i) {
    g.SetBlock(i, i, a.Diag(i));
    if (i + 1 < a.n()) {
      g.SetBlock(i, i + 1, a.Super(i));
      g.SetBlock(i + 1, i, a.Sub(i));
    }
  }
  return g;
}

DenseBlock ToDense(const GeneralBlockMatrix& a) {
  const std::size_t n = a.n(), m = a.m();
  DenseBlock out(n * m, n * m);
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t bj = 0; bj < n; ++bj) {
      const DenseBlock& b = a.Block(bi, bj);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out(bi * m + r, bj * m + c) = b(r, c);
    }
  return out;
}

DenseBlock ToDense(const BlockTridiagonalMatrix& a) { return ToDense(ToGeneral(a)); }

namespace {

DenseBlock Slice(const DenseBlock& dense, std::size_t bi, std::size_t bj, std::size_t m) {
  DenseBlock b(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) b(r, c) = dense(bi * m + r, bj * m + c);
  return b;
}

std::size_t PartitionCount(const DenseBlock& dense, std::size_t m) {
  if (m == 0 || !dense.square() || dense.rows() == 0 || dense.rows() % m != 0) {
    throw DimensionError("dense matrix of size " + std::to_string(dense.rows()) + "x" +
                         std::to_string(dense.cols()) + " cannot be partitioned into " +
                         std::to_string(m) + "x" + std::to_string(m) + " blocks");
  }
  return dense.rows() / m;
}

}  // namespace

GeneralBlockMatrix GeneralFromDense(const DenseBlock& dense, std::size_t m) {
  const std::size_t n = PartitionCount(dense, m);
  std::vector<DenseBlock> blocks;
  blocks.reserve(n * n);
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t bj = 0; bj < n; ++bj) blocks.push_back(Slice(dense, bi, bj, m));
  return GeneralBlockMatrix(n, std::move(blocks));
}

BlockTridiagonalMatrix TridiagonalFromDense(const DenseBlock& dense, std::size_t m) {
  const std::size_t n = PartitionCount(dense, m);
  std::vector<DenseBlock> diag, super, sub;
  for (std::size_t bi = 0; bi < n; ++bi) {
    for (std::size_t bj = 0; bj < n; ++bj) {
      const std::size_t gap = bi > bj ? bi - bj : bj - bi;
      if (gap > 1 && Slice(dense, bi, bj, m).MaxAbs() != 0.0) {
        throw DimensionError("block (" + std::to_string(bi) + "," + std::to_string(bj) +
                             ") lies outside the tridiagonal band but is nonzero");
      }
    }
    diag.push_back(Slice(dense, bi, bi, m));
    if (bi + 1 < n) {
      super.push_back(Slice(dense, bi, bi + 1, m));
      sub.push_back(Slice(dense, bi + 1, bi, m));
    }
  }
  return BlockTridiagonalMatrix(std::move(diag), std::move(super), std::move(sub));
}

DenseBlock BuildTridiagToeplitz(std::size_t k, Scalar sub, Scalar diag, Scalar super) {
  if (k == 0) throw DimensionError("BuildTridiagToeplitz: size must be positive");
  DenseBlock t(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, i) = diag;
    if (i + 1 < k) {
      t(i, i + 1) = super;
      t(i + 1, i) = sub;
    }
  }
  return t;
}

BlockTridiagonalMatrix KronSum(const DenseBlock& t) {
  if (!t.square() || t.rows() == 0) throw DimensionError("KronSum: T must be square");
  const std::size_t k = t.rows();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      bool ok = true;
      if (gap > 1) ok = t(i, j) == Scalar{0.0, 0.0};
      else if (i == j) ok = t(i, j) == t(0, 0);
      else if (j == i + 1) ok = t(i, j) == t(0, 1);
      else ok = t(i, j) == t(1, 0);
      if (!ok) throw Error("KronSum: T is not tridiagonal Toeplitz");
    }
  }
  // Literal T⊗I + I⊗T; entry ((a,b),(c,d)) = T(a,c)·δ(b,d) + δ(a,c)·T(b,d).
  const std::size_t big = k * k;
  DenseBlock dense(big, big);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t d = 0; d < k; ++d) {
          Scalar v{0.0, 0.0};
          if (b == d) v += t(a, c);
          if (a == c) v += t(b, d);
          dense(a * k + b, c * k + d) = v;
        }
  return TridiagonalFromDense(dense, k);
}

BlockTridiagonalMatrix BuildBlockTridiagToeplitz(std::size_t n, std::size_t m, Stencil sub_block,
                                                 Stencil diag_block, Stencil super_block) {
  if (n == 0 || m == 0) throw DimensionError("BuildBlockTridiagToeplitz: sizes must be positive");
  const DenseBlock a = BuildTridiagToeplitz(m, diag_block.sub, diag_block.diag, diag_block.super);
  const DenseBlock b = BuildTridiagToeplitz(m, super_block.sub, super_block.diag, super_block.super);
  const DenseBlock c = BuildTridiagToeplitz(m, sub_block.sub, sub_block.diag, sub_block.super);
  return BlockTridiagonalMatrix(std::vector<DenseBlock>(n, a), std::vector<DenseBlock>(n - 1, b),
                                std::vector<DenseBlock>(n - 1, c));
}

BlockTridiagonalMatrix LeftScaleBlockRows(const BlockTridiagonalMatrix& a,
                                          std::span<const Scalar> r) {
  if (r.size() != a.n()) throw DimensionError("LeftScaleBlockRows: need one scale per block row");
  std::vector<DenseBlock> diag, super, sub;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (r[i] == Scalar{0.0, 0.0}) {
      throw Error("LeftScaleBlockRows: scale for block row " + std::to_string(i) + " is zero");
    }
    diag.push_back(r[i] * a.Diag(i));
    if (i + 1 < a.n()) {
      super.push_back(r[i] * a.Super(i));
      sub.push_back(r[i + 1] * a.Sub(i));
    }
  }
  return BlockTridiagonalMatrix(std::move(diag), std::move(super), std::move(sub));
}

BlockTridiagonalMatrix LeftScaleBlockRows(const BlockTridiagonalMatrix& a,
                                          std::span<const DenseBlock> s) {
  if (s.size() != a.n()) throw DimensionError("LeftScaleBlockRows: need one block per block row");
  std::vector<DenseBlock> diag, super, sub;
  for (std::size_t i = 0; i < a.n(); ++i) {
    diag.push_back(s[i] * a.Diag(i));
    if (i + 1 < a.n()) {
      super.push_back(s[i] * a.Super(i));
      sub.push_back(s[i + 1] * a.Sub(i));
    }
  }
  return BlockTridiagonalMatrix(std::move(diag), std::move(super), std::move(sub));
}

std::vector<Scalar> BuildRandomDiag(std::size_t n, std::int64_t lo, std::int64_t hi,
                                    std::uint64_t seed) {
  if (lo < 1 || hi < lo) throw Error("BuildRandomDiag: require 1 <= lo <= hi");
  std::mt19937_64 engine(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // 2^64 mod span, computed without overflow
  const std::uint64_t remainder = (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  const std::uint64_t limit = remainder == 0 ? 0 : std::numeric_limits<std::uint64_t>::max() - remainder + 1;
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t x = engine();
    while (limit != 0 && x >= limit) x = engine();
    out.emplace_back(static_cast<double>(lo + static_cast<std::int64_t>(x % span)), 0.0);
  }
  return out;
}

}  // namespace blockdom
