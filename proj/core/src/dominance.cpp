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

#include "blockdom/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace blockdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fills row i of the report from its diagonal block and its off-diagonal blocks.
void EvaluateRow(const DenseBlock& diag, const std::vector<const DenseBlock*>& off, NormKind kind,
                 std::size_t i, DominanceReport& report) {
  DenseBlock inverse;
  try {
    inverse = Invert(diag);
  } catch (const SingularError&) {
    report.singular_rows[i] = true;
    report.row_sums[i] = kInf;
    report.fv_row_margins[i] = kInf;
    return;
  }
  double sum = 0.0;
  double plain = 0.0;
  for (const DenseBlock* b : off) {
    sum += Norm(Matmul(inverse, *b), kind);
    plain += Norm(*b, kind);
  }
  report.row_sums[i] = sum;
  report.fv_row_margins[i] = plain - 1.0 / Norm(inverse, kind);
}

DominanceReport Finish(DominanceReport report) {
  const auto& s = report.row_sums;
  const bool any_singular =
      std::any_of(report.singular_rows.begin(), report.singular_rows.end(), [](bool b) { return b; });
  report.dominant = !any_singular && std::all_of(s.begin(), s.end(), [](double v) { return v <= 1.0; });
  report.strict = !any_singular && std::all_of(s.begin(), s.end(), [](double v) { return v < 1.0; });
  report.fv_dominant = !any_singular && std::all_of(report.fv_row_margins.begin(),
                                                    report.fv_row_margins.end(),
                                                    [](double v) { return v <= 0.0; });
  return report;
}

DominanceReport Empty(std::size_t n, NormKind kind) {
  DominanceReport report;
  report.row_sums.assign(n, 0.0);
  report.fv_row_margins.assign(n, 0.0);
  report.singular_rows.assign(n, false);
  report.norm_kind = kind;
  return report;
}

}  // namespace

DominanceReport CheckRowBlockDominance(const GeneralBlockMatrix& a, NormKind kind) {
  DominanceReport report = Empty(a.n(), kind);
  for (std::size_t i = 0; i < a.n(); ++i) {
    std::vector<const DenseBlock*> off;
    for (std::size_t j = 0; j < a.n(); ++j)
      if (j != i) off.push_back(&a.Block(i, j));
    EvaluateRow(a.Block(i, i), off, kind, i, report);
  }
  return Finish(std::move(report));
}

DominanceReport CheckRowBlockDominance(const BlockTridiagonalMatrix& a, NormKind kind) {
  DominanceReport report = Empty(a.n(), kind);
  for (std::size_t i = 0; i < a.n(); ++i) {
    std::vector<const DenseBlock*> off;
    if (i > 0) off.push_back(&a.Sub(i - 1));
    if (i + 1 < a.n()) off.push_back(&a.Super(i));
    EvaluateRow(a.Diag(i), off, kind, i, report);
  }
  return Finish(std::move(report));
}

DominanceReport CheckFvDominance(const GeneralBlockMatrix& a, NormKind kind) {
  return CheckRowBlockDominance(a, kind);
}

DominanceReport CheckColumnBlockDominance(const GeneralBlockMatrix& a, NormKind kind) {
  GeneralBlockMatrix t(a.n(), a.m());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) t.SetBlock(i, j, a.Block(j, i).Transpose());
  return CheckRowBlockDominance(t, kind);
}

NonsingularityVerdict CertifyNonsingular(const GeneralBlockMatrix& a, NormKind kind) {
  DominanceReport report = CheckRowBlockDominance(a, kind);
  if (report.strict) return Certificate{std::move(report)};
  std::string reason;
  for (std::size_t i = 0; i < report.row_sums.size(); ++i) {
    if (report.singular_rows[i]) {
      reason = "diagonal block " + std::to_string(i + 1) + " is singular";
      break;
    }
    if (!(report.row_sums[i] < 1.0)) {
      reason = "block row " + std::to_string(i + 1) + " is not strictly dominant";
      break;
    }
  }
  return Inconclusive{std::move(report), std::move(reason)};
}

std::string DominanceReportJson(const DominanceReport& report) {
  using nlohmann::json;
  auto finite_or_string = [](double v) -> json {
    if (std::isinf(v)) return "inf";
    return v;
  };
  json row_sums = json::array(), margins = json::array(), singular = json::array();
  for (std::size_t i = 0; i < report.row_sums.size(); ++i) {
    row_sums.push_back(finite_or_string(report.row_sums[i]));
    margins.push_back(finite_or_string(report.fv_row_margins[i]));
    if (report.singular_rows[i]) singular.push_back(i + 1);
  }
  json doc = {{"row_sums", row_sums},
              {"dominant", report.dominant},
              {"strict", report.strict},
              {"fv_margins", margins},
              {"fv_dominant", report.fv_dominant},
              {"singular_rows", singular},
              {"norm", std::string(ToString(report.norm_kind))}};
  return doc.dump(1) + "\n";
}

}  // namespace blockdom
