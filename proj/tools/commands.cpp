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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "blockdom/decay_bounds.hpp"
#include "blockdom/dominance.hpp"
#include "blockdom/experiments.hpp"
#include "blockdom/matrix_io.hpp"
#include "blockdom/tridiag_inverse.hpp"
#include "json.hpp"

namespace blockdom::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::string DiagCsv(const BoundsReport& r) {
  std::string out = "i,norm_Zii,l_i,u_ii,valid_flag,denominator,E_l\n";
  for (std::size_t i = 0; i < r.n; ++i) {
    out += fmt::format("{},{},{},{},{},{},{}\n", i + 1, Num(r.NormZ(i, i)), Num(r.lower_diag[i]),
                       Num(r.Upper(i, i)), r.DiagonalValid(i) ? 1 : 0, Num(r.denominators[i]),
                       Num(r.e_lower[i]));
  }
  return out;
}

void WriteBoundsArtifacts(const BoundsRun& run, const fs::path& dir) {
  EnsureDir(dir);
  json summary = json::array();
  for (const BoundsReport& r : run.reports) {
    WriteText(dir / fmt::format("bounds_t{}.csv", r.t), BoundsCsv(r));
    WriteText(dir / fmt::format("diag_t{}.csv", r.t), DiagCsv(r));
    summary.push_back(json::parse(BoundsSummaryJson(r)));
  }
  WriteText(dir / "summary.json", summary.dump(1) + "\n");
  WriteText(dir / "table.txt", FormatBoundsTable(run.reports));
  WriteText(dir / "dominance.json", DominanceReportJson(run.dominance));
  json residual = {{"residual", run.residual}, {"norm", std::string(ToString(run.norm_kind))}};
  WriteText(dir / "residual.json", residual.dump(1) + "\n");
}

void WriteGershgorinArtifacts(const RegionGrid& grid, const ComparisonSummary& summary,
                              const fs::path& dir) {
  EnsureDir(dir);
  WriteText(dir / "grid.csv", RegionGridCsv(grid));
  WriteText(dir / "summary.json", ComparisonSummaryJson(summary, grid));
  std::string boundary = "re,im,row,set\n";
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (bool fv : {false, true}) {
      for (const Scalar& z : LevelCrossings(grid, r, fv)) {
        boundary += fmt::format("{},{},{},{}\n", Num(z.real()), Num(z.imag()), r + 1,
                                fv ? "fv" : "new");
      }
    }
  }
  WriteText(dir / "boundary.csv", boundary);
}

std::size_t FirstStep(const Options& opt) { return opt.t ? *opt.t : 1; }
std::size_t LastStep(const Options& opt) { return opt.t ? *opt.t : 0; }

BoundAnchor AnchorOf(const Options& opt) {
  return opt.a_priori ? BoundAnchor::kAPrioriDiagonal : BoundAnchor::kComputedDiagonal;
}

}  // namespace

std::optional<Box> ParseBox(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("--box: cannot parse '" + item + "' as a number");
    }
  }
  if (values.size() != 4) throw Error("--box expects auto or RE_MIN,RE_MAX,IM_MIN,IM_MAX");
  Box box{values[0], values[1], values[2], values[3]};
  if (!(box.re_max > box.re_min) || !(box.im_max > box.im_min)) {
    throw Error("--box: degenerate box (zero area)");
  }
  return box;
}

std::optional<std::size_t> ParseStep(const std::string& text) {
  if (text.empty() || text == "all") return std::nullopt;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 1) throw Error("--t expects a positive integer or 'all'");
  return static_cast<std::size_t>(v);
}

int CmdCheck(const Options& opt, std::ostream& out, std::ostream& err) {
  MatrixFile file = [&]() -> MatrixFile {
    try {
      return ReadMatrixFile(opt.input);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      throw;
    }
  }();
  const DominanceReport report =
      std::holds_alternative<BlockTridiagonalMatrix>(file)
          ? CheckRowBlockDominance(std::get<BlockTridiagonalMatrix>(file), opt.norm)
          : CheckRowBlockDominance(std::get<GeneralBlockMatrix>(file), opt.norm);
  out << DominanceReportJson(report);
  for (std::size_t i = 0; i < report.singular_rows.size(); ++i) {
    if (report.singular_rows[i]) err << "row " << i + 1 << ": diagonal block is singular\n";
  }
  return report.dominant ? kOk : kNotDominant;
}

int CmdInvert(const Options& opt, std::ostream& out, std::ostream& err) {
  const BlockTridiagonalMatrix a = AsTridiagonal(ReadMatrixFile(opt.input));
  BlockInverse z;
  try {
    z = InvertBlockTridiagonal(a);
  } catch (const SingularError& e) {
    err << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kSingular;
  }
  EnsureDir(opt.output);
  WriteMatrixFile(opt.output / "inverse.json", z.AsGeneral());
  const double residual = Residual(a, z, NormKind::kTwo);
  json sidecar = {{"residual_2norm", residual}};
  WriteText(opt.output / "residual.json", sidecar.dump(1) + "\n");
  out << "residual_2norm " << Num(residual) << "\n";
  return kOk;
}

int CmdBounds(const Options& opt, std::ostream& out, std::ostream& err) {
  const BlockTridiagonalMatrix a = AsTridiagonal(ReadMatrixFile(opt.input));
  BoundsRun run = [&]() {
    try {
      return RunBounds(a, opt.norm, FirstStep(opt), LastStep(opt), AnchorOf(opt));
    } catch (const DominanceViolation& e) {
      err << "error: " << e.what() << "\n";
      throw;
    }
  }();
  WriteBoundsArtifacts(run, opt.output);
  out << FormatBoundsTable(run.reports);
  return kOk;
}

int CmdGershgorin(const Options& opt, std::ostream& out, std::ostream&) {
  const GeneralBlockMatrix a = AsGeneral(ReadMatrixFile(opt.input));
  const RegionGrid grid = EvalGrid(a, opt.box, opt.nx, opt.ny, opt.norm);
  const ComparisonSummary summary = CompareRegions(grid);
  WriteGershgorinArtifacts(grid, summary, opt.output);
  out << ComparisonSummaryJson(summary, grid);
  return kOk;
}

namespace {

int ReproduceBounds(ExampleId id, const Options& opt, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = opt.seed.value_or(0);
  const BlockTridiagonalMatrix a = BuildTridiagonalExample(id, seed);
  EnsureDir(opt.output);
  WriteMatrixFile(opt.output / "matrix.json", a);
  const BoundsRun run = RunBounds(a, opt.norm, FirstStep(opt), LastStep(opt), AnchorOf(opt));
  WriteBoundsArtifacts(run, opt.output);
  out << ToString(id) << ": ||ZA-I|| (" << ToString(opt.norm) << ") = " << Num(run.residual)
      << "\n";
  out << FormatBoundsTable(run.reports);

  bool pass = true;
  std::string report;
  if (!GoldenTable(id).empty() && opt.norm == NormKind::kTwo) {
    report += "t,quantity,expected,computed,rule,status\n";
    for (const GoldenComparison& g : CompareGolden(run, id)) {
      report += fmt::format("{},{},{},{},{},{}\n", g.t, g.quantity, Num(g.expected),
                            Num(g.computed), g.rule, g.pass ? "PASS" : "FAIL");
      pass = pass && g.pass;
    }
    WriteText(opt.output / "golden.csv", report);
  } else {
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
      report += fmt::format("{},{},{}\n", name, ok ? "PASS" : "FAIL", detail);
      pass = pass && ok;
    };
    report += "property,status,detail\n";
    check("strict_dominance", run.dominance.strict, "");
    std::size_t invalid = 0, nonmonotone = 0;
    for (std::size_t k = 0; k < run.reports.size(); ++k) {
      invalid += CountBoundViolations(run.reports[k]);
      if (k > 0) nonmonotone += CountMonotonicityViolations(run.reports[k - 1], run.reports[k]);
    }
    check("bounds_valid", invalid == 0, fmt::format("{} violations", invalid));
    check("monotone_in_t", nonmonotone == 0, fmt::format("{} violations", nonmonotone));
    if (id == ExampleId::kEx23) {
      const TauOmegaTable reference =
          ComputeTauOmega(BuildTridiagonalExample(ExampleId::kEx21), opt.norm);
      const double diff = MaxTableDifference(run.table, reference);
      check("tau_omega_match_ex2.1", diff <= 1e-12, "max diff " + Num(diff));
    }
    WriteText(opt.output / "properties.csv", report);
  }
  out << report;
  if (!pass) {
    err << ToString(id) << ": reproduction FAILED\n";
    return kGoldenMismatch;
  }
  out << ToString(id) << ": PASS\n";
  return kOk;
}

int ReproduceRegions(ExampleId id, const Options& opt, std::ostream& out, std::ostream& err) {
  const GeneralBlockMatrix a = BuildGershgorinExample(id);
  EnsureDir(opt.output);
  WriteMatrixFile(opt.output / "matrix.json", a);
  const RegionGrid grid = EvalGrid(a, opt.box, opt.nx, opt.ny, opt.norm);
  const ComparisonSummary summary = CompareRegions(grid);
  WriteGershgorinArtifacts(grid, summary, opt.output);

  bool pass = summary.total_violations == 0 && summary.union_new < summary.union_fv;
  std::string report = "eigenvalue,node_re,node_im,best_margin_new,status\n";
  for (const EigenCoverage& c : CheckEigenCoverage(grid, PublishedEigenvalues(id))) {
    const Scalar node = grid.Node(c.ix, c.iy);
    report += fmt::format("{},{},{},{},{}\n", Num(c.eigenvalue), Num(node.real()),
                          Num(node.imag()), Num(c.best_margin_new), c.covered ? "PASS" : "FAIL");
    pass = pass && c.covered;
  }
  report += fmt::format("containment_violations,{}\nunion_new,{}\nunion_fv,{}\n",
                        summary.total_violations, summary.union_new, summary.union_fv);
  WriteText(opt.output / "coverage.csv", report);
  out << report;
  if (!pass) {
    err << ToString(id) << ": reproduction FAILED\n";
    return kGoldenMismatch;
  }
  out << ToString(id) << ": PASS\n";
  return kOk;
}

}  // namespace

int CmdReproduce(const Options& opt, std::ostream& out, std::ostream& err) {
  const ExampleId id = ParseExampleId(opt.example);
  if (NeedsSeed(id) && !opt.seed) {
    err << "error: " << ToString(id) << " requires --seed\n";
    return kIoError;
  }
  return IsBoundsExample(id) ? ReproduceBounds(id, opt, out, err)
                             : ReproduceRegions(id, opt, out, err);
}

}  // namespace blockdom::cli
