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

#include "blockdom/matrix_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace blockdom {

using nlohmann::json;

namespace {

json BlockToJson(const DenseBlock& b) {
  json arr = json::array();
  for (const Scalar& v : b.entries()) arr.push_back({{"re", v.real()}, {"im", v.imag()}});
  return arr;
}

json BlockList(std::span<const DenseBlock> blocks) {
  json arr = json::array();
  for (const DenseBlock& b : blocks) arr.push_back(BlockToJson(b));
  return arr;
}

void RejectUnknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw FormatError(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

const json& Require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::size_t RequirePositive(const json& obj, const std::string& key) {
  const json& v = Require(obj, key, "");
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw FormatError(key, "must be a positive integer");
  }
  return v.get<std::size_t>();
}

double RequireDouble(const json& obj, const char* key, const std::string& path) {
  const json& v = Require(obj, key, path);
  if (!v.is_number()) throw FormatError(path + "." + key, "must be a number");
  return v.get<double>();
}

DenseBlock BlockFromJson(const json& j, std::size_t m, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "block must be an array of entries");
  if (j.size() != m * m) {
    throw FormatError(path, "expected " + std::to_string(m * m) + " entries, got " +
                                std::to_string(j.size()));
  }
  std::vector<Scalar> entries;
  entries.reserve(m * m);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string entry_path = path + "[" + std::to_string(k) + "]";
    const json& e = j[k];
    if (!e.is_object()) throw FormatError(entry_path, "entry must be an object {re, im}");
    RejectUnknown(e, {"re", "im"}, entry_path);
    entries.emplace_back(RequireDouble(e, "re", entry_path), RequireDouble(e, "im", entry_path));
  }
  return DenseBlock(m, m, std::move(entries));
}

std::vector<DenseBlock> BlockListFromJson(const json& blocks, const char* key, const char* role,
                                          std::size_t count, std::size_t m) {
  const std::string path = std::string("blocks.") + key;
  const json& list = Require(blocks, key, "blocks");
  if (!list.is_array()) throw FormatError(path, "must be an array of blocks");
  if (list.size() != count) {
    throw FormatError(path, std::string(role) + " blocks: expected " + std::to_string(count) +
                                ", got " + std::to_string(list.size()));
  }
  std::vector<DenseBlock> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(BlockFromJson(list[i], m, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

std::string SerializeMatrix(const MatrixFile& matrix) {
  json doc;
  doc["schema_version"] = std::string(kMatrixSchemaVersion);
  if (const auto* t = std::get_if<BlockTridiagonalMatrix>(&matrix)) {
    doc["kind"] = "block_tridiagonal";
    doc["n"] = t->n();
    doc["m"] = t->m();
    doc["blocks"] = {{"A", BlockList(t->diag())}, {"B", BlockList(t->super())},
                     {"C", BlockList(t->sub())}};
  } else {
    const auto& g = std::get<GeneralBlockMatrix>(matrix);
    doc["kind"] = "general_block";
    doc["n"] = g.n();
    doc["m"] = g.m();
    json grid = json::array();
    for (std::size_t i = 0; i < g.n(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < g.n(); ++j) row.push_back(BlockToJson(g.Block(i, j)));
      grid.push_back(std::move(row));
    }
    doc["blocks"] = {{"grid", std::move(grid)}};
  }
  return doc.dump(1) + "\n";
}

MatrixFile ParseMatrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("", "top level must be an object");
  RejectUnknown(doc, {"schema_version", "kind", "n", "m", "blocks"}, "");

  const json& version = Require(doc, "schema_version", "");
  if (!version.is_string() || version.get<std::string>() != kMatrixSchemaVersion) {
    throw FormatError("schema_version", "unsupported schema version (expected \"1\")");
  }
  const json& kind_field = Require(doc, "kind", "");
  if (!kind_field.is_string()) throw FormatError("kind", "must be a string");
  const std::string kind = kind_field.get<std::string>();
  const std::size_t n = RequirePositive(doc, "n");
  const std::size_t m = RequirePositive(doc, "m");
  const json& blocks = Require(doc, "blocks", "");
  if (!blocks.is_object()) throw FormatError("blocks", "must be an object");

  if (kind == "block_tridiagonal") {
    RejectUnknown(blocks, {"A", "B", "C"}, "blocks");
    auto diag = BlockListFromJson(blocks, "A", "diag", n, m);
    auto super = BlockListFromJson(blocks, "B", "super", n - 1, m);
    auto sub = BlockListFromJson(blocks, "C", "sub", n - 1, m);
    return BlockTridiagonalMatrix(std::move(diag), std::move(super), std::move(sub));
  }
  if (kind == "general_block") {
    RejectUnknown(blocks, {"grid"}, "blocks");
    const json& grid = Require(blocks, "grid", "blocks");
    if (!grid.is_array() || grid.size() != n) {
      throw FormatError("blocks.grid", "expected " + std::to_string(n) + " block rows");
    }
    std::vector<DenseBlock> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_path = "blocks.grid[" + std::to_string(i) + "]";
      if (!grid[i].is_array() || grid[i].size() != n) {
        throw FormatError(row_path, "expected " + std::to_string(n) + " blocks");
      }
      for (std::size_t j = 0; j < n; ++j) {
        cells.push_back(BlockFromJson(grid[i][j], m, row_path + "[" + std::to_string(j) + "]"));
      }
    }
    return GeneralBlockMatrix(n, std::move(cells));
  }
  throw FormatError("kind", "unknown kind '" + kind + "'");
}

void WriteMatrixFile(const std::filesystem::path& path, const MatrixFile& matrix) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << SerializeMatrix(matrix);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

MatrixFile ReadMatrixFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseMatrix(buffer.str());
}

GeneralBlockMatrix AsGeneral(const MatrixFile& matrix) {
  if (const auto* t = std::get_if<BlockTridiagonalMatrix>(&matrix)) return ToGeneral(*t);
  return std::get<GeneralBlockMatrix>(matrix);
}

BlockTridiagonalMatrix AsTridiagonal(const MatrixFile& matrix) {
  if (const auto* t = std::get_if<BlockTridiagonalMatrix>(&matrix)) return *t;
  const auto& g = std::get<GeneralBlockMatrix>(matrix);
  return TridiagonalFromDense(ToDense(g), g.m());
}

}  // namespace blockdom
