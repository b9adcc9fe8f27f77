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

#include "blockdom/gershgorin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"

namespace blockdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string Num(double v) {
  if (std::isinf(v)) return "inf";
  return fmt::format("{:.17g}", v);
}

// Sum of ||A_ij|| over j != i, reused at every grid node.
std::vector<double> OffDiagonalNormSums(const GeneralBlockMatrix& a, NormKind kind) {
  std::vector<double> sums(a.n(), 0.0);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (j != i) sums[i] += Norm(a.Block(i, j), kind);
  return sums;
}

void MarginsInto(const GeneralBlockMatrix& a, const std::vector<double>& off_sums, Scalar z,
                 NormKind kind, double* out_new, double* out_fv) {
  const std::size_t m = a.m();
  for (std::size_t i = 0; i < a.n(); ++i) {
    DenseBlock shifted = a.Block(i, i);
    for (std::size_t k = 0; k < m; ++k) shifted(k, k) -= z;
    DenseBlock resolvent;
    try {
      resolvent = Invert(shifted);
    } catch (const SingularError&) {
      out_new[i] = kInf;
      out_fv[i] = kInf;
      continue;
    } catch (const NumericalError&) {
      out_new[i] = kInf;
      out_fv[i] = kInf;
      continue;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j)
      if (j != i) sum += Norm(resolvent * a.Block(i, j), kind);
    out_new[i] = sum;
    out_fv[i] = Norm(resolvent, kind) * off_sums[i];
  }
}

bool IsNormal(const DenseBlock& b) {
  const DenseBlock bh = b.ConjugateTranspose();
  const DenseBlock commutator = b * bh - bh * b;
  return commutator.MaxAbs() <= 1e-12 * std::max(1.0, b.MaxAbs() * b.MaxAbs());
}

std::size_t WorkerCount(std::size_t requested) {
  if (requested > 0) return requested;
  std::size_t count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BLOCKDOM_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) count = std::min<std::size_t>(count, static_cast<std::size_t>(cap));
  }
  return count;
}

}  // namespace

std::vector<RegionQuery> MarginsAt(const GeneralBlockMatrix& a, Scalar z, NormKind kind) {
  const std::vector<double> off = OffDiagonalNormSums(a, kind);
  std::vector<double> mn(a.n()), mf(a.n());
  MarginsInto(a, off, z, kind, mn.data(), mf.data());
  std::vector<RegionQuery> out;
  out.reserve(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) out.push_back({z, i, mn[i], mf[i]});
  return out;
}

Box AutoBox(const GeneralBlockMatrix& a, NormKind kind) {
  const std::vector<double> off = OffDiagonalNormSums(a, kind);
  Box box{kInf, -kInf, kInf, -kInf};
  auto cover = [&box](Scalar center, double radius) {
    box.re_min = std::min(box.re_min, center.real() - radius);
    box.re_max = std::max(box.re_max, center.real() + radius);
    box.im_min = std::min(box.im_min, center.imag() - radius);
    box.im_max = std::max(box.im_max, center.imag() + radius);
  };
  for (std::size_t i = 0; i < a.n(); ++i) {
    const DenseBlock& d = a.Block(i, i);
    // For a normal block the two-norm resolvent is 1/dist(z, spectrum);
    // other norms are bounded by sqrt(m) times it.
    const double norm_factor = kind == NormKind::kTwo ? 1.0 : std::sqrt(static_cast<double>(a.m()));
    if (IsNormal(d)) {
      for (const Scalar& lambda : EigenvaluesSmall(d)) cover(lambda, off[i] * norm_factor);
    } else {
      cover(Scalar{0.0, 0.0}, Norm(d, NormKind::kTwo) + off[i] * norm_factor);
    }
  }
  double width = box.re_max - box.re_min;
  double height = box.im_max - box.im_min;
  // A zero-height box (all centers real, zero radius) gets a symmetric band.
  if (height <= 0.0) {
    const double half = std::max(width, 1.0) / 2.0;
    box.im_min -= half;
    box.im_max += half;
    height = box.im_max - box.im_min;
  }
  if (width <= 0.0) {
    const double half = std::max(height, 1.0) / 2.0;
    box.re_min -= half;
    box.re_max += half;
    width = box.re_max - box.re_min;
  }
  box.re_min -= 0.1 * width;
  box.re_max += 0.1 * width;
  box.im_min -= 0.1 * height;
  box.im_max += 0.1 * height;
  return box;
}

Scalar RegionGrid::Node(std::size_t ix, std::size_t iy) const {
  const double re = box.re_min + static_cast<double>(ix) * (box.re_max - box.re_min) /
                                     static_cast<double>(nx - 1);
  const double im = box.im_min + static_cast<double>(iy) * (box.im_max - box.im_min) /
                                     static_cast<double>(ny - 1);
  return {re, im};
}

std::pair<std::size_t, std::size_t> RegionGrid::NearestNode(Scalar z) const {
  auto nearest = [](double v, double lo, double hi, std::size_t count) {
    const double f = (v - lo) / (hi - lo) * static_cast<double>(count - 1);
    const double clamped = std::clamp(std::round(f), 0.0, static_cast<double>(count - 1));
    return static_cast<std::size_t>(clamped);
  };
  return {nearest(z.real(), box.re_min, box.re_max, nx),
          nearest(z.imag(), box.im_min, box.im_max, ny)};
}

RegionGrid EvalGrid(const GeneralBlockMatrix& a, std::optional<Box> box, std::size_t nx,
                    std::size_t ny, NormKind kind, std::size_t threads) {
  if (nx < 2 || ny < 2) throw Error("EvalGrid: nx and ny must be at least 2");
  RegionGrid g;
  g.box = box ? *box : AutoBox(a, kind);
  if (!(g.box.re_max > g.box.re_min) || !(g.box.im_max > g.box.im_min)) {
    throw Error("EvalGrid: degenerate box (zero area)");
  }
  g.nx = nx;
  g.ny = ny;
  g.rows = a.n();
  g.norm_kind = kind;
  g.margin_new.assign(nx * ny * g.rows, 0.0);
  g.margin_fv.assign(nx * ny * g.rows, 0.0);
  const std::vector<double> off = OffDiagonalNormSums(a, kind);

  // Workers take contiguous bands of grid lines.
  const std::size_t workers = std::min(WorkerCount(threads), ny);
  auto band = [&](std::size_t first, std::size_t last) {
    for (std::size_t iy = first; iy < last; ++iy)
      for (std::size_t ix = 0; ix < nx; ++ix) {
        const std::size_t base = (iy * nx + ix) * g.rows;
        MarginsInto(a, off, g.Node(ix, iy), kind, &g.margin_new[base], &g.margin_fv[base]);
      }
  };
  if (workers <= 1) {
    band(0, ny);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (ny + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(ny, first + chunk);
      if (first >= last) break;
      pool.emplace_back(band, first, last);
    }
    for (auto& t : pool) t.join();
  }
  return g;
}

ComparisonSummary CompareRegions(const RegionGrid& grid) {
  ComparisonSummary s;
  s.count_new.assign(grid.rows, 0);
  s.count_fv.assign(grid.rows, 0);
  s.violations.assign(grid.rows, 0);
  s.area_ratio.assign(grid.rows, 1.0);
  s.node_area = (grid.box.re_max - grid.box.re_min) / static_cast<double>(grid.nx - 1) *
                (grid.box.im_max - grid.box.im_min) / static_cast<double>(grid.ny - 1);
  const std::size_t nodes = grid.nx * grid.ny;
  for (std::size_t node = 0; node < nodes; ++node) {
    bool any_new = false, any_fv = false;
    for (std::size_t r = 0; r < grid.rows; ++r) {
      const bool in_new = grid.margin_new[node * grid.rows + r] >= 1.0;
      const bool in_fv = grid.margin_fv[node * grid.rows + r] >= 1.0;
      s.count_new[r] += in_new;
      s.count_fv[r] += in_fv;
      s.violations[r] += in_new && !in_fv;
      any_new |= in_new;
      any_fv |= in_fv;
    }
    s.union_new += any_new;
    s.union_fv += any_fv;
  }
  for (std::size_t r = 0; r < grid.rows; ++r) {
    s.total_violations += s.violations[r];
    if (s.count_fv[r] > 0) {
      s.area_ratio[r] = static_cast<double>(s.count_new[r]) / static_cast<double>(s.count_fv[r]);
    } else if (s.count_new[r] > 0) {
      s.area_ratio[r] = kInf;
    }
  }
  return s;
}

std::vector<Scalar> LevelCrossings(const RegionGrid& grid, std::size_t row, bool fv) {
  auto value = [&](std::size_t ix, std::size_t iy) {
    return fv ? grid.MarginFv(ix, iy, row) : grid.MarginNew(ix, iy, row);
  };
  std::vector<Scalar> out;
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const bool inside = value(ix, iy) >= 1.0;
      if (ix + 1 < grid.nx && inside != (value(ix + 1, iy) >= 1.0)) {
        out.push_back(0.5 * (grid.Node(ix, iy) + grid.Node(ix + 1, iy)));
      }
      if (iy + 1 < grid.ny && inside != (value(ix, iy + 1) >= 1.0)) {
        out.push_back(0.5 * (grid.Node(ix, iy) + grid.Node(ix, iy + 1)));
      }
    }
  }
  return out;
}

std::string RegionGridCsv(const RegionGrid& grid) {
  std::string out = "re,im,row,margin_new,margin_fv\n";
  out.reserve(out.size() + grid.nx * grid.ny * grid.rows * 64);
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Scalar z = grid.Node(ix, iy);
      for (std::size_t r = 0; r < grid.rows; ++r) {
        out += fmt::format("{},{},{},{},{}\n", Num(z.real()), Num(z.imag()), r + 1,
                           Num(grid.MarginNew(ix, iy, r)), Num(grid.MarginFv(ix, iy, r)));
      }
    }
  return out;
}

std::string ComparisonSummaryJson(const ComparisonSummary& summary, const RegionGrid& grid) {
  using nlohmann::json;
  json rows = json::array();
  for (std::size_t r = 0; r < grid.rows; ++r) {
    json ratio = std::isinf(summary.area_ratio[r]) ? json("inf") : json(summary.area_ratio[r]);
    rows.push_back({{"row", r + 1},
                    {"count_new", summary.count_new[r]},
                    {"count_fv", summary.count_fv[r]},
                    {"violations", summary.violations[r]},
                    {"area_ratio", ratio},
                    {"area_new", static_cast<double>(summary.count_new[r]) * summary.node_area},
                    {"area_fv", static_cast<double>(summary.count_fv[r]) * summary.node_area}});
  }
  json doc = {{"box", {grid.box.re_min, grid.box.re_max, grid.box.im_min, grid.box.im_max}},
              {"nx", grid.nx},
              {"ny", grid.ny},
              {"norm", std::string(ToString(grid.norm_kind))},
              {"rows", rows},
              {"union_new", summary.union_new},
              {"union_fv", summary.union_fv},
              {"total_violations", summary.total_violations}};
  return doc.dump(1) + "\n";
}

}  // namespace blockdom
