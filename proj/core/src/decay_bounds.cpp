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

#include "blockdom/decay_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "json.hpp"

namespace blockdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

}  // namespace

RowCoefficients ComputeRowCoefficients(const BlockTridiagonalMatrix& a, NormKind kind) {
  const std::size_t n = a.n();
  RowCoefficients c;
  c.norm_kind = kind;
  c.identity_norm = IdentityNorm(a.m(), kind);
  c.inv_a_b.assign(n, 0.0);
  c.inv_a_c.assign(n, 0.0);
  c.norm_a.assign(n, 0.0);
  c.norm_inv_a.assign(n, 0.0);
  c.norm_b.assign(n, 0.0);
  c.norm_c.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    DenseBlock inv;
    try {
      inv = Invert(a.Diag(i));
    } catch (const SingularError& e) {
      throw SingularError(e.pivot_index(), "A_" + std::to_string(i + 1) + " inversion");
    }
    c.norm_a[i] = Norm(a.Diag(i), kind);
    c.norm_inv_a[i] = Norm(inv, kind);
    if (i + 1 < n) {
      c.inv_a_b[i] = Norm(inv * a.Super(i), kind);
      c.norm_b[i] = Norm(a.Super(i), kind);
    }
    if (i > 0) {
      c.inv_a_c[i] = Norm(inv * a.Sub(i - 1), kind);
      c.norm_c[i] = Norm(a.Sub(i - 1), kind);
    }
  }
  return c;
}

TauOmegaTable::TauOmegaTable(RowCoefficients coefficients, std::vector<std::vector<double>> tau,
                             std::vector<std::vector<double>> omega)
    : coefficients_(std::move(coefficients)), tau_(std::move(tau)), omega_(std::move(omega)) {
  if (tau_.empty() || tau_.size() != omega_.size()) {
    throw DimensionError("TauOmegaTable: need matching, nonempty tau and omega tables");
  }
}

void TauOmegaTable::RequireStep(std::size_t step) const {
  if (step < 1 || step > t_max()) {
    throw Error("refinement step " + std::to_string(step) + " outside 1.." +
                std::to_string(t_max()));
  }
}

double TauOmegaTable::Tau(std::ptrdiff_t row, std::size_t step) const {
  RequireStep(step);
  if (row < 0 || row >= static_cast<std::ptrdiff_t>(n())) return 0.0;
  return tau_[step - 1][static_cast<std::size_t>(row)];
}

double TauOmegaTable::Omega(std::ptrdiff_t row, std::size_t step) const {
  RequireStep(step);
  if (row < 0 || row >= static_cast<std::ptrdiff_t>(n())) return 0.0;
  return omega_[step - 1][static_cast<std::size_t>(row)];
}

double TauOmegaTable::Rho1(std::size_t step) const {
  RequireStep(step);
  const auto& row = tau_[step - 1];
  return *std::max_element(row.begin(), row.end());
}

double TauOmegaTable::Rho2(std::size_t step) const {
  RequireStep(step);
  const auto& row = omega_[step - 1];
  return *std::max_element(row.begin(), row.end());
}

TauOmegaTable ComputeTauOmega(const BlockTridiagonalMatrix& a, NormKind kind, std::size_t t_max) {
  const std::size_t n = a.n();
  if (t_max == 0) t_max = std::max<std::size_t>(n > 0 ? n - 1 : 1, 1);
  RowCoefficients c = ComputeRowCoefficients(a, kind);

  auto ratio = [](double num, double den, std::size_t row, const char* which) {
    if (!(den > 0.0)) {
      throw DominanceViolation(row + 1, std::string(which) + " denominator " + Num(den) + " <= 0");
    }
    return num / den;
  };

  std::vector<std::vector<double>> tau(t_max, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> omega(t_max, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    tau[0][i] = ratio(c.inv_a_b[i], 1.0 - c.inv_a_c[i], i, "tau");
    omega[0][i] = ratio(c.inv_a_c[i], 1.0 - c.inv_a_b[i], i, "omega");
  }
  // One-based row r = i + 1. tau keeps its previous value once t > r; omega
  // once n - t + 1 < r.
  for (std::size_t t = 2; t <= t_max; ++t) {
    const auto& tau_prev = tau[t - 2];
    const auto& omega_prev = omega[t - 2];
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = i + 1;
      if (t > r) {
        tau[t - 1][i] = tau_prev[i];
      } else {
        const double before = i > 0 ? tau_prev[i - 1] : 0.0;
        tau[t - 1][i] = ratio(c.inv_a_b[i], 1.0 - c.inv_a_c[i] * before, i, "tau");
      }
      if (n + 1 < t + r) {
        omega[t - 1][i] = omega_prev[i];
      } else {
        const double after = i + 1 < n ? omega_prev[i + 1] : 0.0;
        omega[t - 1][i] = ratio(c.inv_a_c[i], 1.0 - c.inv_a_b[i] * after, i, "omega");
      }
    }
  }
  return TauOmegaTable(std::move(c), std::move(tau), std::move(omega));
}

ChainFactors ComputeChains(const BlockTridiagonalMatrix& a) {
  const std::size_t n = a.n();
  const std::size_t m = a.m();
  const DenseBlock identity = DenseBlock::Identity(m);
  std::vector<DenseBlock> a_inv;
  a_inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) a_inv.push_back(Invert(a.Diag(i)));

  ChainFactors ch;
  ch.L.resize(n > 0 ? n - 1 : 0);
  ch.T.resize(ch.L.size());
  ch.M.resize(n);
  ch.W.resize(n);
  if (n < 2) return ch;

  auto invert_named = [](const DenseBlock& b, const std::string& name) {
    try {
      return Invert(b);
    } catch (const SingularError& e) {
      throw SingularError(e.pivot_index(), name + " inversion");
    }
  };

  // L_1 = T_1 = A_1^{-1} B_1; T_i = I - A_i^{-1} C_{i-1} L_{i-1}; L_i = T_i^{-1} A_i^{-1} B_i
  ch.L[0] = a_inv[0] * a.Super(0);
  ch.T[0] = ch.L[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    ch.T[i] = identity - a_inv[i] * a.Sub(i - 1) * ch.L[i - 1];
    ch.L[i] = invert_named(ch.T[i], "T_" + std::to_string(i + 1)) * (a_inv[i] * a.Super(i));
  }
  // M_n = W_n = A_n^{-1} C_{n-1}; W_i = I - A_i^{-1} B_i M_{i+1}; M_i = W_i^{-1} A_i^{-1} C_{i-1}
  ch.M[n - 1] = a_inv[n - 1] * a.Sub(n - 2);
  ch.W[n - 1] = ch.M[n - 1];
  for (std::size_t i = n - 2; i >= 1; --i) {
    ch.W[i] = identity - a_inv[i] * a.Super(i) * ch.M[i + 1];
    ch.M[i] = invert_named(ch.W[i], "W_" + std::to_string(i + 1)) * (a_inv[i] * a.Sub(i - 1));
  }
  return ch;
}

std::vector<DenseBlock> ReconstructU(const ChainFactors& chains, const DenseBlock& last_u) {
  const std::size_t n = chains.L.size() + 1;
  std::vector<DenseBlock> u(n);
  u[n - 1] = last_u;
  for (std::size_t i = n - 1; i-- > 0;) u[i] = -(chains.L[i] * u[i + 1]);
  return u;
}

std::vector<DenseBlock> ReconstructY(const ChainFactors& chains, const DenseBlock& first_y) {
  const std::size_t n = chains.M.size();
  std::vector<DenseBlock> y(n);
  y[0] = first_y;
  for (std::size_t i = 1; i < n; ++i) y[i] = -(chains.M[i] * y[i - 1]);
  return y;
}

BoundsReport ComputeBounds(const BlockTridiagonalMatrix& a, const BlockInverse& z,
                           const TauOmegaTable& table, std::size_t t, BoundAnchor anchor) {
  const std::size_t n = a.n();
  if (z.n != n || z.m != a.m() || table.n() != n) {
    throw DimensionError("ComputeBounds: matrix, inverse and table sizes differ");
  }
  const RowCoefficients& c = table.coefficients();
  const NormKind kind = table.norm_kind();

  BoundsReport r;
  r.n = n;
  r.t = t;
  r.anchor = anchor;
  r.norm_z.assign(n * n, 0.0);
  r.upper.assign(n * n, kInf);
  r.upper_valid.assign(n * n, false);
  r.e_upper.assign(n * n, kNaN);
  r.lower_diag.assign(n, 0.0);
  r.e_lower.assign(n, 0.0);
  r.denominators.assign(n, 0.0);
  r.rho1 = table.Rho1(t);
  r.rho2 = table.Rho2(t);

  for (std::size_t k = 0; k < n * n; ++k) r.norm_z[k] = Norm(z.Z[k], kind);

  // diagonal sandwich
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::ptrdiff_t>(i);
    const double coupling =
        table.Tau(row - 1, t) * c.norm_c[i] + table.Omega(row + 1, t) * c.norm_b[i];
    r.lower_diag[i] = c.identity_norm / (c.norm_a[i] + coupling);
    const double den = 1.0 / c.norm_inv_a[i] - coupling;
    r.denominators[i] = den;
    if (den > 0.0) {
      r.upper[i * n + i] = c.identity_norm / den;
      r.upper_valid[i * n + i] = true;
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const double anchor_norm =
        anchor == BoundAnchor::kComputedDiagonal ? r.norm_z[j * n + j] : r.upper[j * n + j];
    const bool anchor_valid = anchor == BoundAnchor::kComputedDiagonal || r.upper_valid[j * n + j];
    if (!anchor_valid) continue;
    // above the diagonal: prod_{k=i}^{j-1} tau_{k,t}
    double product = anchor_norm;
    for (std::size_t i = j; i-- > 0;) {
      product *= table.Tau(static_cast<std::ptrdiff_t>(i), t);
      r.upper[i * n + j] = product;
      r.upper_valid[i * n + j] = true;
    }
    // below the diagonal: prod_{k=j+1}^{i} omega_{k,t}
    product = anchor_norm;
    for (std::size_t i = j + 1; i < n; ++i) {
      product *= table.Omega(static_cast<std::ptrdiff_t>(i), t);
      r.upper[i * n + j] = product;
      r.upper_valid[i * n + j] = true;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i * n + j;
      if (!r.upper_valid[k]) continue;
      const double u = r.upper[k];
      r.e_upper[k] = u > 0.0 ? (u - r.norm_z[k]) / u : 0.0;
      if (i != j) r.max_e_upper = std::max(r.max_e_upper, r.e_upper[k]);
    }
    const double zii = r.norm_z[i * n + i];
    r.e_lower[i] = (zii - r.lower_diag[i]) / zii;
    r.max_e_lower = std::max(r.max_e_lower, r.e_lower[i]);
  }
  return r;
}

std::vector<EnvelopeEntry> DecayEnvelope(const TauOmegaTable& table, std::size_t t,
                                         const std::vector<double>& z_diag_norms) {
  const std::size_t n = table.n();
  if (z_diag_norms.size() != n) throw DimensionError("DecayEnvelope: need one norm per block row");
  const double rho1 = table.Rho1(t);
  const double rho2 = table.Rho2(t);
  std::vector<EnvelopeEntry> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double rate = i < j ? rho1 : rho2;
      const double power = static_cast<double>(i < j ? j - i : i - j);
      out.push_back({i, j, std::pow(rate, power) * z_diag_norms[j]});
    }
  }
  return out;
}

std::string BoundsCsv(const BoundsReport& report) {
  std::string out = "i,j,norm_Zij,u_ij,valid_flag,E_u\n";
  const std::size_t n = report.n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i * n + j;
      out += fmt::format("{},{},{},{},{},{}\n", i + 1, j + 1, Num(report.norm_z[k]),
                         Num(report.upper[k]), report.upper_valid[k] ? 1 : 0,
                         Num(report.e_upper[k]));
    }
  }
  return out;
}

std::string BoundsSummaryJson(const BoundsReport& report) {
  nlohmann::json doc = {{"t", report.t},
                        {"max_Eu", report.max_e_upper},
                        {"max_El", report.max_e_lower},
                        {"rho1", report.rho1},
                        {"rho2", report.rho2}};
  return doc.dump() + "\n";
}

}  // namespace blockdom
