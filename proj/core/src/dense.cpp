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

#include "blockdom/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace blockdom {

std::string_view ToString(NormKind kind) {
  switch (kind) {
    case NormKind::kOne:
      return "one";
    case NormKind::kInfinity:
      return "inf";
    case NormKind::kFrobenius:
      return "fro";
    case NormKind::kTwo:
      return "two";
  }
  return "two";
}

NormKind ParseNormKind(std::string_view name) {
  if (name == "one" || name == "1") return NormKind::kOne;
  if (name == "inf" || name == "infinity") return NormKind::kInfinity;
  if (name == "fro" || name == "frobenius") return NormKind::kFrobenius;
  if (name == "two" || name == "2") return NormKind::kTwo;
  throw Error("unknown norm kind '" + std::string(name) + "' (expected one|inf|fro|two)");
}

DenseBlock::DenseBlock(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar{0.0, 0.0}) {}

DenseBlock::DenseBlock(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("DenseBlock: expected " + std::to_string(rows_ * cols_) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

DenseBlock DenseBlock::FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  DenseBlock out(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("DenseBlock::FromRows: ragged rows");
    std::size_t j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

DenseBlock DenseBlock::Identity(std::size_t m) {
  DenseBlock out(m, m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1.0;
  return out;
}

DenseBlock DenseBlock::Diagonal(std::span<const Scalar> diag) {
  DenseBlock out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

DenseBlock DenseBlock::ConjugateTranspose() const {
  DenseBlock out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

DenseBlock DenseBlock::Transpose() const {
  DenseBlock out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double DenseBlock::MaxAbs() const {
  double best = 0.0;
  for (const Scalar& v : entries_) best = std::max(best, std::abs(v));
  return best;
}

bool DenseBlock::AllFinite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

namespace {

void RequireSameShape(const DenseBlock& a, const DenseBlock& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

void RequireFinite(const DenseBlock& a, const char* op) {
  if (!a.AllFinite()) throw NumericalError(std::string(op) + ": non-finite result");
}

}  // namespace

DenseBlock& DenseBlock::operator+=(const DenseBlock& other) {
  RequireSameShape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

DenseBlock& DenseBlock::operator-=(const DenseBlock& other) {
  RequireSameShape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

DenseBlock& DenseBlock::operator*=(Scalar s) {
  for (Scalar& v : entries_) v *= s;
  return *this;
}

DenseBlock operator+(DenseBlock a, const DenseBlock& b) { return a += b; }
DenseBlock operator-(DenseBlock a, const DenseBlock& b) { return a -= b; }
DenseBlock operator-(DenseBlock a) { return a *= -1.0; }
DenseBlock operator*(Scalar s, DenseBlock a) { return a *= s; }
DenseBlock operator*(const DenseBlock& a, const DenseBlock& b) { return Matmul(a, b); }

DenseBlock Matmul(const DenseBlock& a, const DenseBlock& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("Matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  DenseBlock out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc{0.0, 0.0};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LU

DenseBlock LUFactors::Lower() const {
  const std::size_t m = size();
  DenseBlock l = DenseBlock::Identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = lu(i, j);
  return l;
}

DenseBlock LUFactors::Upper() const {
  const std::size_t m = size();
  DenseBlock u(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) u(i, j) = lu(i, j);
  return u;
}

DenseBlock LUFactors::Permutation() const {
  const std::size_t m = size();
  DenseBlock p(m, m);
  for (std::size_t k = 0; k < m; ++k) p(k, perm[k]) = 1.0;
  return p;
}

DenseBlock LUFactors::Solve(const DenseBlock& rhs) const {
  const std::size_t m = size();
  if (rhs.rows() != m) throw DimensionError("LUFactors::Solve: right-hand side has wrong rows");
  DenseBlock x(m, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    // forward substitution on the permuted column, then back substitution
    for (std::size_t i = 0; i < m; ++i) {
      Scalar acc = rhs(perm[i], c);
      for (std::size_t k = 0; k < i; ++k) acc -= lu(i, k) * x(k, c);
      x(i, c) = acc;
    }
    for (std::size_t ii = m; ii-- > 0;) {
      Scalar acc = x(ii, c);
      for (std::size_t k = ii + 1; k < m; ++k) acc -= lu(ii, k) * x(k, c);
      x(ii, c) = acc / lu(ii, ii);
    }
  }
  RequireFinite(x, "LUFactors::Solve");
  return x;
}

LUFactors LuFactor(const DenseBlock& block, double pivot_tolerance) {
  if (!block.square()) throw DimensionError("LuFactor: block is not square");
  const std::size_t m = block.rows();
  LUFactors f{block, std::vector<std::size_t>(m), false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double threshold = pivot_tolerance * block.MaxAbs();
  DenseBlock& a = f.lu;

  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < m; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > threshold)) throw SingularError(k);
    if (p != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.swapped = true;
    }
    const Scalar pivot = a(k, k);
    for (std::size_t i = k + 1; i < m; ++i) {
      const Scalar factor = a(i, k) / pivot;
      a(i, k) = factor;
      if (factor == Scalar{0.0, 0.0}) continue;
      for (std::size_t j = k + 1; j < m; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return f;
}

DenseBlock Invert(const DenseBlock& block, double pivot_tolerance) {
  const LUFactors f = LuFactor(block, pivot_tolerance);
  return f.Solve(DenseBlock::Identity(block.rows()));
}

// ---------------------------------------------------------------------------
// Norms

namespace spectral {

namespace {

DenseBlock Gram(const DenseBlock& a) {
  const std::size_t n = a.cols();
  DenseBlock g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar acc{0.0, 0.0};
      for (std::size_t k = 0; k < a.rows(); ++k) acc += std::conj(a(k, i)) * a(k, j);
      g(i, j) = acc;
      g(j, i) = std::conj(acc);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

double VectorNorm(const std::vector<Scalar>& v) {
  double s = 0.0;
  for (const Scalar& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

PowerResult PowerIteration(const DenseBlock& block, double tolerance, int max_iterations) {
  PowerResult result;
  if (block.empty() || block.MaxAbs() == 0.0) {
    result.converged = true;
    return result;
  }
  const DenseBlock g = Gram(block);
  const std::size_t n = g.rows();
  std::vector<Scalar> v(n, Scalar{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
  std::vector<Scalar> w(n);
  double lambda_prev = -1.0;
  for (int it = 1; it <= max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) acc += g(i, j) * v[j];
      w[i] = acc;
    }
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += (std::conj(v[i]) * w[i]).real();
    const double wn = VectorNorm(w);
    result.iterations = it;
    if (wn == 0.0) {
      // start vector in the null space of the Gram matrix
      result.sigma = 0.0;
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
    if (lambda_prev >= 0.0 && std::abs(lambda - lambda_prev) <= tolerance * lambda) {
      result.sigma = std::sqrt(std::max(lambda, 0.0));
      result.converged = true;
      return result;
    }
    lambda_prev = lambda;
  }
  result.sigma = std::sqrt(std::max(lambda_prev, 0.0));
  return result;
}

std::vector<double> JacobiSingularValues(const DenseBlock& block) {
  const std::size_t rows = block.rows();
  const std::size_t cols = block.cols();
  // column-major working copy
  std::vector<std::vector<Scalar>> col(cols, std::vector<Scalar>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) col[j][i] = block(i, j);

  constexpr double kEps = 1e-15;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        Scalar gamma{0.0, 0.0};
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(col[p][k]);
          beta += std::norm(col[q][k]);
          gamma += std::conj(col[p][k]) * col[q][k];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // A unit phase on column q makes the inner product real; singular
        // values are unchanged by right unitary scaling.
        const Scalar phase = std::conj(gamma) / g;
        for (Scalar& x : col[q]) x *= phase;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < rows; ++k) {
          const Scalar xp = col[p][k];
          const Scalar xq = col[q][k];
          col[p][k] = c * xp - s * xq;
          col[q][k] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) sv[j] = VectorNorm(col[j]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

bool DominatesGram(const DenseBlock& block, double sigma, double slack) {
  const DenseBlock g = Gram(block);
  const std::size_t n = g.rows();
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += g(i, i).real();
  const double shift = sigma * sigma * (1.0 + slack) + 1e-300 + 1e-15 * trace;
  // Cholesky of shift·I - G; success means shift exceeds the largest eigenvalue.
  DenseBlock h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = (i == j ? shift : 0.0) - g(i, j);
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(h(j, k));
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    h(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Scalar acc = h(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= h(i, k) * std::conj(h(j, k));
      h(i, j) = acc / ljj;
    }
  }
  return true;
}

}  // namespace spectral

double Norm(const DenseBlock& block, NormKind kind) {
  const std::size_t rows = block.rows();
  const std::size_t cols = block.cols();
  switch (kind) {
    case NormKind::kOne: {
      double best = 0.0;
      for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::abs(block(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::kInfinity: {
      double best = 0.0;
      for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += std::abs(block(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::kFrobenius: {
      double s = 0.0;
      for (const Scalar& v : block.entries()) s += std::norm(v);
      return std::sqrt(s);
    }
    case NormKind::kTwo: {
      const spectral::PowerResult power = spectral::PowerIteration(block);
      if (power.converged && power.sigma > 0.0 && spectral::DominatesGram(block, power.sigma)) {
        return power.sigma;
      }
      if (block.empty() || block.MaxAbs() == 0.0) return 0.0;
      return spectral::JacobiSingularValues(block).front();
    }
  }
  return 0.0;
}

double IdentityNorm(std::size_t m, NormKind kind) {
  if (m == 0) throw DimensionError("IdentityNorm: m must be positive");
  return kind == NormKind::kFrobenius ? std::sqrt(static_cast<double>(m)) : 1.0;
}

// ---------------------------------------------------------------------------
// Eigenvalues

std::vector<Scalar> EigenvaluesSmall(const DenseBlock& block, int max_iter) {
  if (!block.square()) throw DimensionError("EigenvaluesSmall: block is not square");
  const std::size_t m = block.rows();
  if (m > 64) throw DimensionError("EigenvaluesSmall: block larger than 64x64");
  if (max_iter <= 0) throw Error("EigenvaluesSmall: max_iter must be positive");
  if (m == 0) return {};
  Eigen::MatrixXcd a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = block(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  solver.setMaxIterations(static_cast<Eigen::Index>(max_iter) * static_cast<Eigen::Index>(m));
  solver.compute(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("EigenvaluesSmall: QR iteration did not converge in " +
                           std::to_string(max_iter) + " sweeps");
  }
  std::vector<Scalar> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  std::sort(values.begin(), values.end(), [](const Scalar& x, const Scalar& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return values;
}

}  // namespace blockdom
