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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "blockdom/dense.hpp"
#include "blockdom/gershgorin.hpp"

namespace blockdom::cli {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kNotDominant = 2,
  kSingular = 3,
  kGoldenMismatch = 4,
};

struct Options {
  std::filesystem::path input;
  std::filesystem::path output = ".";
  NormKind norm = NormKind::kTwo;
  std::optional<std::size_t> t;  // nullopt: all refinement steps
  std::optional<Box> box;        // nullopt: automatic
  std::size_t nx = 400;
  std::size_t ny = 400;
  std::optional<std::uint64_t> seed;
  std::string example;  // reproduce only
  bool a_priori = false;
};

/// "auto" -> nullopt, otherwise RE_MIN,RE_MAX,IM_MIN,IM_MAX.
std::optional<Box> ParseBox(const std::string& text);
/// "all" -> nullopt.
std::optional<std::size_t> ParseStep(const std::string& text);

int CmdCheck(const Options& opt, std::ostream& out, std::ostream& err);
int CmdInvert(const Options& opt, std::ostream& out, std::ostream& err);
int CmdBounds(const Options& opt, std::ostream& out, std::ostream& err);
int CmdGershgorin(const Options& opt, std::ostream& out, std::ostream& err);
int CmdReproduce(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace blockdom::cli
