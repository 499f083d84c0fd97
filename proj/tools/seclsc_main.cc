// Copyright 2026 The seclsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "seclsc/cli.h"

int main(int argc, char** argv) {
  namespace cli = seclsc::cli;
  CLI::App app{"Build, verify and bound secure distributed linearly separable computation schemes"};
  app.require_subcommand(1);

  cli::DemoOptions demo;
  auto* demo_cmd = app.add_subcommand("demo", "three-server cyclic example over a small field");
  demo_cmd->add_option("--field", demo.field, "prime field size");
  demo_cmd->add_option("--seed", demo.seed, "rng seed");

  cli::BuildOptions build;
  int k = 0;
  auto* build_cmd = app.add_subcommand("build", "build a scheme and write it as JSON");
  build_cmd->add_option("--n", build.n, "servers")->required();
  build_cmd->add_option("--nr", build.n_r, "responding servers")->required();
  build_cmd->add_option("--k", k, "datasets (default N)");
  build_cmd->add_option("--scheme", build.scheme, "cyclic | frac-rep | combined")
      ->check(CLI::IsMember({"cyclic", "frac-rep", "combined"}));
  build_cmd->add_option("--field", build.field, "prime field size");
  build_cmd->add_option("--seed", build.seed, "rng seed");
  build_cmd->add_option("--out", build.out, "output file (default stdout)");

  cli::VerifyOptions verify;
  std::string mode;
  auto* verify_cmd = app.add_subcommand("verify", "verify a scheme JSON file");
  verify_cmd->add_option("--in", verify.in, "scheme JSON")->required();
  verify_cmd->add_option("--mode", mode, "exhaustive | sampled (default: exhaustive when feasible)")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--sample-count", verify.sample_count, "subsets checked in sampled mode");

  cli::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "randomness-size table as CSV");
  sweep_cmd->add_option("--n-range", sweep.n_range, "N range, a..b")->required();
  sweep_cmd->add_option("--m-range", sweep.m_range, "M' range, a..b")->required();
  sweep_cmd->add_option("--out", sweep.out, "output CSV (default stdout)");

  cli::ConverseOptions converse;
  auto* converse_cmd = app.add_subcommand("converse", "brute-force min-max chain length");
  converse_cmd->add_option("--n", converse.n, "servers")->required();
  converse_cmd->add_option("--m", converse.m, "replication M'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (*demo_cmd) return cli::RunDemo(demo, std::cout, std::cerr);
  if (*build_cmd) {
    if (build_cmd->count("--k") > 0) build.k = k;
    return cli::RunBuild(build, std::cout, std::cerr);
  }
  if (*verify_cmd) {
    if (mode == "exhaustive") verify.mode = seclsc::DecodeMode::kExhaustive;
    if (mode == "sampled") verify.mode = seclsc::DecodeMode::kSampled;
    return cli::RunVerify(verify, std::cout, std::cerr);
  }
  if (*sweep_cmd) return cli::RunSweep(sweep, std::cout, std::cerr);
  return cli::RunConverse(converse, std::cout, std::cerr);
}
