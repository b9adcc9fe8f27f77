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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using blockdom::cli::ExitCode;

// Maps library errors onto the documented exit codes.
int Guarded(int (*command)(const blockdom::cli::Options&, std::ostream&, std::ostream&),
            const blockdom::cli::Options& opt) {
  try {
    return command(opt, std::cout, std::cerr);
  } catch (const blockdom::DominanceViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kNotDominant;
  } catch (const blockdom::SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kSingular;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kIoError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blockdom: block diagonal dominance, block tridiagonal inverses, decay bounds "
               "and block Gershgorin regions"};
  app.require_subcommand(1);

  blockdom::cli::Options opt;
  std::string norm = "two";
  std::string step = "all";
  std::string box = "auto";
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", opt.input, "Matrix file (JSON)");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_option("--output", opt.output, "Output directory")->capture_default_str();
    sub->add_option("--norm", norm, "Matrix norm: one|inf|fro|two")
        ->check(CLI::IsMember({"one", "inf", "fro", "two"}))
        ->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "Row block diagonal dominance report");
  add_common(check, true);
  auto* invert = app.add_subcommand("invert", "Invert a block tridiagonal matrix");
  add_common(invert, true);
  auto* bounds = app.add_subcommand("bounds", "Decay bounds on inverse block norms");
  add_common(bounds, true);
  auto* gersh = app.add_subcommand("gershgorin", "Block Gershgorin inclusion regions on a grid");
  add_common(gersh, true);
  auto* repro = app.add_subcommand("reproduce", "Rebuild a published example and verify it");
  add_common(repro, false);
  repro->add_option("example", opt.example, "ex2.1|ex2.2|ex2.3|ex2.4|ex3.1a|ex3.1b")->required();

  for (auto* sub : {bounds, repro}) {
    sub->add_option("--t", step, "Refinement step N or 'all'")->capture_default_str();
    sub->add_flag("--a-priori", opt.a_priori,
                  "Anchor off-diagonal bounds at the diagonal upper bound instead of ||Z_jj||");
  }
  for (auto* sub : {gersh, repro}) {
    sub->add_option("--box", box, "auto or RE_MIN,RE_MAX,IM_MIN,IM_MAX")->capture_default_str();
    sub->add_option("--nx", opt.nx, "Grid nodes along the real axis")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--ny", opt.ny, "Grid nodes along the imaginary axis")->check(CLI::Range(2, 1 << 20));
  }
  auto* seed_opt = repro->add_option("--seed", seed, "Seed for ex2.3 / ex2.4 row scaling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ExitCode::kIoError;
  }

  try {
    opt.norm = blockdom::ParseNormKind(norm);
    opt.t = blockdom::cli::ParseStep(step);
    opt.box = blockdom::cli::ParseBox(box);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kIoError;
  }
  if (seed_opt->count() > 0) opt.seed = seed;

  if (check->parsed()) return Guarded(blockdom::cli::CmdCheck, opt);
  if (invert->parsed()) return Guarded(blockdom::cli::CmdInvert, opt);
  if (bounds->parsed()) return Guarded(blockdom::cli::CmdBounds, opt);
  if (gersh->parsed()) return Guarded(blockdom::cli::CmdGershgorin, opt);
  return Guarded(blockdom::cli::CmdReproduce, opt);
}
