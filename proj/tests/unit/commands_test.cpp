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
#include <sstream>

#include "blockdom/experiments.hpp"
#include "blockdom/matrix_io.hpp"
#include "commands.hpp"
#include "json.hpp"

namespace blockdom::cli {
namespace {

namespace fs = std::filesystem;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("blockdom_cmd_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const MatrixFile& m) {
    const fs::path p = dir_ / name;
    WriteMatrixFile(p, m);
    return p;
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

BlockTridiagonalMatrix Scalar(std::size_t n, double sub, double diag, double super) {
  return TridiagonalFromDense(BuildTridiagToeplitz(n, sub, diag, super), 1);
}

TEST(OptionParsingTest, BoxAndStep) {
  EXPECT_FALSE(ParseBox("auto").has_value());
  const auto box = ParseBox("-1,2,-3,4.5");
  ASSERT_TRUE(box.has_value());
  EXPECT_EQ(box->re_min, -1.0);
  EXPECT_EQ(box->im_max, 4.5);
  EXPECT_THROW(ParseBox("1,2,3"), Error);
  EXPECT_THROW(ParseBox("2,1,0,1"), Error);
  EXPECT_FALSE(ParseStep("all").has_value());
  EXPECT_EQ(ParseStep("3"), 3u);
  EXPECT_THROW(ParseStep("0"), Error);
  EXPECT_THROW(ParseStep("2x"), Error);
}

TEST_F(CommandsTest, CheckExitCodes) {
  Options opt;
  opt.input = Write("strict.json", Scalar(4, -1.0, 3.0, -1.0));
  EXPECT_EQ(CmdCheck(opt, out_, err_), kOk);
  opt.input = Write("boundary.json", Scalar(4, -1.0, 2.0, -1.0));
  EXPECT_EQ(CmdCheck(opt, out_, err_), kOk);
  opt.input = Write("weak.json", Scalar(4, -1.0, 1.5, -1.0));
  EXPECT_EQ(CmdCheck(opt, out_, err_), kNotDominant);
}

TEST_F(CommandsTest, CheckPrintsReport) {
  Options opt;
  opt.input = Write("a.json", Scalar(3, -1.0, 4.0, -1.0));
  opt.norm = NormKind::kInfinity;
  ASSERT_EQ(CmdCheck(opt, out_, err_), kOk);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["norm"], "inf");
  EXPECT_DOUBLE_EQ(doc["row_sums"][1].get<double>(), 0.5);
  EXPECT_EQ(doc["strict"], true);
}

TEST_F(CommandsTest, InvertWritesInverseAndResidual) {
  Options opt;
  opt.input = Write("a.json", Scalar(3, -1.0, 2.0, -1.0));
  opt.output = dir_ / "out";
  ASSERT_EQ(CmdInvert(opt, out_, err_), kOk);
  const auto z = AsGeneral(ReadMatrixFile(opt.output / "inverse.json"));
  EXPECT_NEAR(z.Block(1, 1)(0, 0).real(), 1.0, 1e-14);
  const auto res = nlohmann::json::parse(Slurp(opt.output / "residual.json"));
  EXPECT_LE(res["residual_2norm"].get<double>(), 1e-14);
}

TEST_F(CommandsTest, InvertReportsSingularCoupling) {
  std::vector<DenseBlock> diag(3, DenseBlock::FromRows({{4}}));
  std::vector<DenseBlock> super = {DenseBlock::Zero(1), DenseBlock::FromRows({{-1}})};
  std::vector<DenseBlock> sub(2, DenseBlock::FromRows({{-1}}));
  Options opt;
  opt.input = Write("a.json", BlockTridiagonalMatrix(diag, super, sub));
  opt.output = dir_ / "out";
  EXPECT_EQ(CmdInvert(opt, out_, err_), kSingular);
  EXPECT_NE(err_.str().find("B_1 inversion"), std::string::npos);
}

TEST_F(CommandsTest, BoundsWritesArtifacts) {
  Options opt;
  opt.input = Write("a.json", Scalar(5, -1.0, 3.0, -1.0));
  opt.output = dir_ / "out";
  ASSERT_EQ(CmdBounds(opt, out_, err_), kOk);
  for (int t = 1; t <= 4; ++t) {
    EXPECT_TRUE(fs::exists(opt.output / ("bounds_t" + std::to_string(t) + ".csv")));
    EXPECT_TRUE(fs::exists(opt.output / ("diag_t" + std::to_string(t) + ".csv")));
  }
  for (const char* f : {"summary.json", "table.txt", "dominance.json", "residual.json"})
    EXPECT_TRUE(fs::exists(opt.output / f)) << f;
  const auto summary = nlohmann::json::parse(Slurp(opt.output / "summary.json"));
  EXPECT_EQ(summary.size(), 4u);
}

TEST_F(CommandsTest, BoundsSingleStep) {
  Options opt;
  opt.input = Write("a.json", Scalar(5, -1.0, 3.0, -1.0));
  opt.output = dir_ / "out";
  opt.t = 2;
  ASSERT_EQ(CmdBounds(opt, out_, err_), kOk);
  EXPECT_TRUE(fs::exists(opt.output / "bounds_t2.csv"));
  EXPECT_FALSE(fs::exists(opt.output / "bounds_t1.csv"));
}

TEST_F(CommandsTest, BoundsRejectsNonDominant) {
  Options opt;
  opt.input = Write("a.json", Scalar(4, -1.0, 1.5, -1.0));
  opt.output = dir_ / "out";
  EXPECT_THROW(CmdBounds(opt, out_, err_), DominanceViolation);
}

TEST_F(CommandsTest, GershgorinWritesArtifacts) {
  Options opt;
  opt.input = Write("a.json", BuildGershgorinExample(ExampleId::kEx31a));
  opt.output = dir_ / "out";
  opt.nx = 40;
  opt.ny = 30;
  ASSERT_EQ(CmdGershgorin(opt, out_, err_), kOk);
  const auto summary = nlohmann::json::parse(Slurp(opt.output / "summary.json"));
  EXPECT_EQ(summary["total_violations"], 0);
  EXPECT_EQ(summary["nx"], 40);
  EXPECT_TRUE(fs::exists(opt.output / "grid.csv"));
  EXPECT_TRUE(fs::exists(opt.output / "boundary.csv"));
}

TEST_F(CommandsTest, ReproduceSeedRequirement) {
  Options opt;
  opt.example = "ex2.3";
  opt.output = dir_ / "out";
  EXPECT_EQ(CmdReproduce(opt, out_, err_), kIoError);
  opt.seed = 4;
  EXPECT_EQ(CmdReproduce(opt, out_, err_), kOk);
  EXPECT_TRUE(fs::exists(opt.output / "properties.csv"));
  EXPECT_TRUE(fs::exists(opt.output / "matrix.json"));
}

TEST_F(CommandsTest, ReproduceGoldenExample) {
  Options opt;
  opt.example = "ex2.1";
  opt.output = dir_ / "out";
  EXPECT_EQ(CmdReproduce(opt, out_, err_), kOk);
  const std::string golden = Slurp(opt.output / "golden.csv");
  EXPECT_EQ(golden.find("FAIL"), std::string::npos);
}

TEST_F(CommandsTest, ReproduceRegionExample) {
  Options opt;
  opt.example = "ex3.1b";
  opt.output = dir_ / "out";
  opt.nx = 120;
  opt.ny = 120;
  EXPECT_EQ(CmdReproduce(opt, out_, err_), kOk);
  EXPECT_TRUE(fs::exists(opt.output / "coverage.csv"));
}

}  // namespace
}  // namespace blockdom::cli
