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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "blockdom/block_matrix.hpp"

namespace blockdom {

inline constexpr std::string_view kMatrixSchemaVersion = "1";

/// Contents of a matrix file: either kind "block_tridiagonal" or "general_block".
using MatrixFile = std::variant<BlockTridiagonalMatrix, GeneralBlockMatrix>;

/// Serialized JSON text. Floating point entries are written in the shortest
/// form that reads back to the identical double.
std::string SerializeMatrix(const MatrixFile& matrix);
/// Throws FormatError naming the offending field path.
MatrixFile ParseMatrix(std::string_view text);

void WriteMatrixFile(const std::filesystem::path& path, const MatrixFile& matrix);
MatrixFile ReadMatrixFile(const std::filesystem::path& path);

/// Convenience views; a tridiagonal file is widened, a general file must lie
/// inside the tridiagonal band.
GeneralBlockMatrix AsGeneral(const MatrixFile& matrix);
BlockTridiagonalMatrix AsTridiagonal(const MatrixFile& matrix);

}  // namespace blockdom
