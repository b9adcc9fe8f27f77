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

#include "blockdom/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace blockdom {

namespace {

constexpr std::size_t kExampleSize = 9;

}  // namespace

ExampleId ParseExampleId(std::string_view name) {
  if (name == "ex2.1") return ExampleId::kEx21;
  if (name == "ex2.2") return ExampleId::kEx22;
  if (name == "ex2.3") return ExampleId::kEx23;
  if (name == "ex2.4") return ExampleId::kEx24;
  if (name == "ex3.1a") return ExampleId::kEx31a;
  if (name == "ex3.1b") return ExampleId::kEx31b;
  throw Error("unknown example '" + std::string(name) +
              "' (expected ex2.1|ex2.2|ex2.3|ex2.4|ex3.1a|ex3.1b)");
}

std::string_view ToString(ExampleId id) {
  switch (id) {
    case ExampleId::kEx21: return "ex2.1";
    case ExampleId::kEx22: return "ex2.2";
    case ExampleId::kEx23: return "ex2.3";
    case ExampleId::kEx24: return "ex2.4";
    case ExampleId::kEx31a: return "ex3.1a";
    case ExampleId::kEx31b: return "ex3.1b";
  }
  return "?";
}

bool IsBoundsExample(ExampleId id) {
  return id != ExampleId::kEx31a && id != ExampleId::kEx31b;
}

bool NeedsSeed(ExampleId id) { return id == ExampleId::kEx23 || id == ExampleId::kEx24; }

BlockTridiagonalMatrix BuildTridiagonalExample(ExampleId id, std::uint64_t seed) {
  switch (id) {
    case ExampleId::kEx21:
      return KronSum(BuildTridiagToeplitz(kExampleSize, -1.0, 2.0, -1.0));
    case ExampleId::kEx22:
      return KronSum(BuildTridiagToeplitz(kExampleSize, -110.0, 209.999, -99.999));
    case ExampleId::kEx23: {
      const auto r = BuildRandomDiag(kExampleSize, 1, 10, seed);
      return LeftScaleBlockRows(BuildTridiagonalExample(ExampleId::kEx21), r);
    }
    case ExampleId::kEx24: {
      const Stencil off{-0.01, -2.0, 1.0};
      const Stencil diag{-2.0, 10.0, -2.0};
      const auto r = BuildRandomDiag(kExampleSize, 1, 10, seed);
      return LeftScaleBlockRows(
          BuildBlockTridiagToeplitz(kExampleSize, kExampleSize, off, diag, off), r);
    }
    default:
      throw Error(std::string(ToString(id)) + " is not a block tridiagonal example");
  }
}

GeneralBlockMatrix BuildGershgorinExample(ExampleId id) {
  DenseBlock dense;
  if (id == ExampleId::kEx31a) {
    dense = DenseBlock::FromRows({{4, -2, -1, 1}, {-2, 4, 0, -1}, {-1, 0, 4, -2}, {1, -1, -2, 4}});
  } else if (id == ExampleId::kEx31b) {
    dense = DenseBlock::FromRows(
        {{4, -2, -0.5, 0.5}, {-2, 5, -1.4, -0.5}, {-0.5, 0, 4, -2}, {0.5, -0.5, -2, 4}});
  } else {
    throw Error(std::string(ToString(id)) + " is not an inclusion-region example");
  }
  return GeneralFromDense(dense, 2);
}

std::vector<double> PublishedEigenvalues(ExampleId id) {
  if (id == ExampleId::kEx31a) return {1.4586, 2.3820, 4.6180, 7.5414};
  if (id == ExampleId::kEx31b) return {1.6851, 2.5959, 6.2263, 6.4927};
  return {};
}

std::vector<GoldenEntry> GoldenTable(ExampleId id) {
  if (id == ExampleId::kEx21) {
    return {{1, 0.84478, false, 0.91039}, {2, 0.63381, false, 0.90877},
            {3, 0.39537, false, 0.90765}, {4, 0.20899, false, 0.90529},
            {5, 0.09596, false, 0.90529}, {6, 0.03780, false, 0.90529},
            {7, 0.01109, false, 0.90529}, {8, 7.141e-13, true, 0.90529}};
  }
  if (id == ExampleId::kEx22) {
    return {{1, 0.88856, false, 0.90934}, {2, 0.70640, false, 0.90768},
            {3, 0.46700, false, 0.90652}, {4, 0.25859, false, 0.90411},
            {5, 0.12442, false, 0.90411}, {6, 0.05378, false, 0.90411},
            {7, 0.02140, false, 0.90411}, {8, 0.00824, false, 0.90411}};
  }
  return {};
}

BoundsRun RunBounds(const BlockTridiagonalMatrix& a, NormKind kind, std::size_t t_first,
                    std::size_t t_last, BoundAnchor anchor) {
  DominanceReport dominance = CheckRowBlockDominance(a, kind);
  if (!dominance.dominant) {
    for (std::size_t i = 0; i < dominance.row_sums.size(); ++i) {
      if (!(dominance.row_sums[i] <= 1.0)) {
        throw DominanceViolation(i + 1, "not row block diagonally dominant (row sum " +
                                            fmt::format("{:.17g}", dominance.row_sums[i]) + ")");
      }
    }
  }
  TauOmegaTable table = ComputeTauOmega(a, kind);
  const RowCoefficients& c = table.coefficients();
  const std::size_t n = a.n();
  const bool corners = n == 1 || (c.inv_a_b[0] < 1.0 && c.inv_a_c[n - 1] < 1.0);
  if (!corners) {
    throw DominanceViolation(c.inv_a_b[0] < 1.0 ? n : 1,
                             "corner condition ||A_1^{-1}B_1|| < 1, ||A_n^{-1}C_{n-1}|| < 1 fails");
  }
  BlockInverse z = InvertBlockTridiagonal(a);
  const double residual = Residual(a, z, kind);

  if (t_last == 0) t_last = table.t_max();
  t_first = std::max<std::size_t>(t_first, 1);
  t_last = std::min(t_last, table.t_max());
  std::vector<BoundsReport> reports;
  for (std::size_t t = t_first; t <= t_last; ++t) {
    reports.push_back(ComputeBounds(a, z, table, t, anchor));
  }
  return BoundsRun{a,
                   kind,
                   std::move(dominance),
                   corners,
                   std::move(z),
                   residual,
                   std::move(table),
                   std::move(reports)};
}

std::vector<GoldenComparison> CompareGolden(const BoundsRun& run, ExampleId id) {
  std::vector<GoldenComparison> out;
  for (const GoldenEntry& g : GoldenTable(id)) {
    const auto it = std::find_if(run.reports.begin(), run.reports.end(),
                                 [&](const BoundsReport& r) { return r.t == g.t; });
    const double eu = it == run.reports.end() ? std::nan("") : it->max_e_upper;
    const double el = it == run.reports.end() ? std::nan("") : it->max_e_lower;
    if (g.upper_is_tiny) {
      out.push_back({g.t, "max_Eu", g.max_e_upper, eu, "<=1e-10", eu <= kTinyBound});
    } else {
      out.push_back({g.t, "max_Eu", g.max_e_upper, eu, "abs<=5e-4",
                     std::abs(eu - g.max_e_upper) <= kGoldenTolerance});
    }
    out.push_back({g.t, "max_El", g.max_e_lower, el, "abs<=5e-4",
                   std::abs(el - g.max_e_lower) <= kGoldenTolerance});
  }
  return out;
}

std::size_t CountBoundViolations(const BoundsReport& report, double tol) {
  std::size_t bad = 0;
  const std::size_t n = report.n;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (report.upper_valid[k] && report.upper[k] < report.norm_z[k] - tol) ++bad;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (report.lower_diag[i] > report.norm_z[i * n + i] + tol) ++bad;
  }
  return bad;
}

std::size_t CountMonotonicityViolations(const BoundsReport& prev, const BoundsReport& next,
                                        double slack) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < prev.upper.size(); ++k) {
    if (prev.upper_valid[k] && !next.upper_valid[k]) {
      ++bad;
      continue;
    }
    if (prev.upper_valid[k] && next.upper[k] > prev.upper[k] + slack * std::max(1.0, prev.upper[k])) {
      ++bad;
    }
  }
  return bad;
}

double MaxTableDifference(const TauOmegaTable& a, const TauOmegaTable& b) {
  if (a.n() != b.n() || a.t_max() != b.t_max()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t t = 1; t <= a.t_max(); ++t)
    for (std::size_t i = 0; i < a.n(); ++i) {
      const auto row = static_cast<std::ptrdiff_t>(i);
      worst = std::max(worst, std::abs(a.Tau(row, t) - b.Tau(row, t)));
      worst = std::max(worst, std::abs(a.Omega(row, t) - b.Omega(row, t)));
    }
  return worst;
}

std::vector<EigenCoverage> CheckEigenCoverage(const RegionGrid& grid,
                                              const std::vector<double>& eigenvalues, double tol) {
  std::vector<EigenCoverage> out;
  for (double lambda : eigenvalues) {
    const auto [ix, iy] = grid.NearestNode(Scalar{lambda, 0.0});
    double best = 0.0;
    for (std::size_t r = 0; r < grid.rows; ++r) best = std::max(best, grid.MarginNew(ix, iy, r));
    out.push_back({lambda, ix, iy, best, best >= 1.0 - tol});
  }
  return out;
}

std::string FormatBoundsTable(const std::vector<BoundsReport>& reports) {
  std::string header = fmt::format("{:>12}", "t");
  std::string upper = fmt::format("{:>12}", "max E^u");
  std::string lower = fmt::format("{:>12}", "max E^l");
  for (const BoundsReport& r : reports) {
    header += fmt::format(" {:>11}", r.t);
    upper += r.max_e_upper < 1e-4 ? fmt::format(" {:>11.3e}", r.max_e_upper)
                                  : fmt::format(" {:>11.5f}", r.max_e_upper);
    lower += fmt::format(" {:>11.5f}", r.max_e_lower);
  }
  return header + "\n" + upper + "\n" + lower + "\n";
}

}  // namespace blockdom
