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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "blockdom/matrix_io.hpp"
#include "test_support.hpp"

namespace blockdom {
namespace {

TEST(MatrixIoTest, TridiagonalRoundTripIsExact) {
  testing::Generator gen(8);
  const auto a = gen.DominantTridiagonal(4, 3, NormKind::kTwo, true);
  const MatrixFile back = ParseMatrix(SerializeMatrix(a));
  ASSERT_TRUE(std::holds_alternative<BlockTridiagonalMatrix>(back));
  EXPECT_EQ(std::get<BlockTridiagonalMatrix>(back), a);
}

TEST(MatrixIoTest, GeneralRoundTripIsExact) {
  testing::Generator gen(9);
  const auto g = gen.General(3, 2, true, 4.0);
  const MatrixFile back = ParseMatrix(SerializeMatrix(g));
  ASSERT_TRUE(std::holds_alternative<GeneralBlockMatrix>(back));
  EXPECT_EQ(std::get<GeneralBlockMatrix>(back), g);
}

TEST(MatrixIoTest, SerializationIsStable) {
  testing::Generator gen(10);
  const auto a = gen.DominantTridiagonal(3, 2, NormKind::kOne, false);
  const std::string once = SerializeMatrix(a);
  EXPECT_EQ(SerializeMatrix(ParseMatrix(once)), once);
}

TEST(MatrixIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "blockdom_io_test.json";
  const auto a = KronSum(BuildTridiagToeplitz(3, -1.0, 2.0, -1.0));
  WriteMatrixFile(path, a);
  EXPECT_EQ(AsTridiagonal(ReadMatrixFile(path)), a);
  EXPECT_EQ(AsGeneral(ReadMatrixFile(path)), ToGeneral(a));
  std::filesystem::remove(path);
}

MatrixFile TwoBlockWithoutSuper() {
  return ParseMatrix(R"({"schema_version":"1","kind":"block_tridiagonal","n":2,"m":1,
    "blocks":{"A":[[{"re":2,"im":0}],[{"re":2,"im":0}]],
              "C":[[{"re":1,"im":0}]]}})");
}

TEST(MatrixIoTest, MissingSuperNamesField) {
  try {
    TwoBlockWithoutSuper();
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.field().rfind("blocks.B", 0), 0u) << e.what();
  }
}

TEST(MatrixIoTest, EmptyInputFails) {
  EXPECT_THROW(ParseMatrix(""), FormatError);
  const auto path = std::filesystem::temp_directory_path() / "blockdom_empty.json";
  std::ofstream(path).close();
  EXPECT_THROW(ReadMatrixFile(path), FormatError);
  std::filesystem::remove(path);
}

TEST(MatrixIoTest, MissingFileFails) {
  EXPECT_THROW(ReadMatrixFile("/nonexistent/blockdom.json"), Error);
}

TEST(MatrixIoTest, RejectsUnknownFieldsAndBadSchema) {
  EXPECT_THROW(ParseMatrix(R"({"schema_version":"2","kind":"general_block","n":1,"m":1,
    "blocks":{"grid":[[[{"re":1,"im":0}]]]}})"),
               FormatError);
  EXPECT_THROW(ParseMatrix(R"({"schema_version":"1","kind":"general_block","n":1,"m":1,"x":0,
    "blocks":{"grid":[[[{"re":1,"im":0}]]]}})"),
               FormatError);
  EXPECT_THROW(ParseMatrix(R"({"schema_version":"1","kind":"general_block","n":1,"m":1,
    "blocks":{"grid":[[[{"re":1,"im":0,"x":1}]]]}})"),
               FormatError);
}

TEST(MatrixIoTest, RejectsWrongBlockShape) {
  try {
    ParseMatrix(R"({"schema_version":"1","kind":"general_block","n":1,"m":2,
      "blocks":{"grid":[[[{"re":1,"im":0}]]]}})");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(e.field().find("grid"), std::string::npos) << e.what();
  }
}

TEST(MatrixIoTest, AsTridiagonalRejectsFill) {
  GeneralBlockMatrix g(3, 1);
  for (std::size_t i = 0; i < 3; ++i) g.SetBlock(i, i, DenseBlock::Identity(1));
  g.SetBlock(0, 2, DenseBlock::Identity(1));
  EXPECT_THROW(AsTridiagonal(g), Error);
}

}  // namespace
}  // namespace blockdom
