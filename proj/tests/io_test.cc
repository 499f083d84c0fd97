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

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "seclsc/builders.h"
#include "seclsc/cli.h"
#include "seclsc/errors.h"
#include "seclsc/serialization.h"

namespace seclsc {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("seclsc_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string Slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void ExpectSameScheme(const SchemeSpec& a, const SchemeSpec& b) {
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.params.k, b.params.k);
  EXPECT_EQ(a.params.n, b.params.n);
  EXPECT_EQ(a.params.n_r, b.params.n_r);
  EXPECT_EQ(a.params.field, b.params.field);
  EXPECT_EQ(a.params.seed, b.params.seed);
  EXPECT_EQ(a.grouping, b.grouping);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_EQ(a.randomness_count, b.randomness_count);
  EXPECT_EQ(a.coeff_matrix, b.coeff_matrix);
  EXPECT_EQ(a.server_vectors, b.server_vectors);
  EXPECT_EQ(a.output_lengths, b.output_lengths);
  EXPECT_EQ(a.trace, b.trace);
}

TEST(Serialization, AssignmentIsOneBased) {
  Assignment a(3, {{0, 1}, {1, 2}, {0, 2}});
  nlohmann::json j = ToJson(a);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["sets"], nlohmann::json::parse("[[1,2],[2,3],[1,3]]"));
  EXPECT_EQ(AssignmentFromJson(j), a);
}

TEST(Serialization, SchemeRoundTrip) {
  for (SchemeSpec spec : {BuildCombinedScheme(ProblemParams::Make(14, 7, 4)),
                          BuildCyclicScheme(ProblemParams::Make(5, 5, 3, 101, 3)),
                          BuildFractionalRepetitionScheme(ProblemParams::Make(6, 6, 4))}) {
    ExpectSameScheme(SchemeSpecFromJson(nlohmann::json::parse(ToJson(spec).dump())), spec);
  }
}

TEST(Serialization, TraceRoundTrip) {
  HRecursionTrace t = HValue(19, 7);
  EXPECT_EQ(TraceFromJson(ToJson(t)), t);
}

TEST(Serialization, RejectsMalformedSchemes) {
  nlohmann::json good = ToJson(BuildCyclicScheme(ProblemParams::Make(4, 4, 3)));
  auto broken = [&](const std::function<void(nlohmann::json&)>& edit) {
    nlohmann::json j = good;
    edit(j);
    return j;
  };
  EXPECT_THROW(SchemeSpecFromJson(broken([](auto& j) { j.erase("lambda"); })), ParseError);
  EXPECT_THROW(SchemeSpecFromJson(broken([](auto& j) { j["coeff_matrix"]["rows"] = 7; })), ParseError);
  EXPECT_THROW(SchemeSpecFromJson(broken([](auto& j) { j["coeff_matrix"]["entries"][0] = 2147483647; })),
               ParseError);
  EXPECT_THROW(SchemeSpecFromJson(broken([](auto& j) { j["scheme"] = "mystery"; })), ParseError);
  EXPECT_THROW(SchemeSpecFromJson(broken([](auto& j) { j["params"]["N_r"] = 9; })), ParseError);
  EXPECT_THROW(SchemeSpecFromJson(nlohmann::json::array()), ParseError);
}

TEST(Serialization, ReportFields) {
  VerificationReport r = Verify(BuildCyclicScheme(ProblemParams::Make(3, 3, 2, 3)));
  nlohmann::json j = ToJson(r);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["field"], 3);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["decodability"]["mode"], "exhaustive");
  EXPECT_EQ(j["communication_cost"], 2);
  EXPECT_EQ(j["randomness_size"], 1);
}

TEST(Cli, ParseRange) {
  EXPECT_EQ(cli::ParseRange("3..7"), std::make_pair(3, 7));
  EXPECT_EQ(cli::ParseRange("5"), std::make_pair(5, 5));
  EXPECT_THROW(cli::ParseRange("7..3"), UsageError);
  EXPECT_THROW(cli::ParseRange("a..3"), UsageError);
  EXPECT_THROW(cli::ParseRange("3..4x"), UsageError);
}

TEST(Cli, Demo) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::RunDemo({}, out, err), cli::kExitPass);
  EXPECT_NE(out.str().find("# field=3 seed=42"), std::string::npos);
  EXPECT_NE(out.str().find("communication cost 2, randomness size 1"), std::string::npos);
  EXPECT_NE(out.str().find("decodable on 3/3 pairs"), std::string::npos);

  std::ostringstream out5, err5;
  cli::DemoOptions five;
  five.field = 5;
  EXPECT_EQ(cli::RunDemo(five, out5, err5), cli::kExitPass);

  std::ostringstream bad_out, bad_err;
  cli::DemoOptions bad;
  bad.field = 4;
  EXPECT_EQ(cli::RunDemo(bad, bad_out, bad_err), cli::kExitUsage);
}

TEST(Cli, BuildVerifyRoundTrip) {
  TempDir dir;
  cli::BuildOptions b;
  b.n = 8;
  b.n_r = 4;
  b.k = 8;
  b.out = dir.File("s.json");
  std::ostringstream out, err;
  ASSERT_EQ(cli::RunBuild(b, out, err), cli::kExitPass);
  EXPECT_NE(out.str().find("lambda=3 eta=2 cost=4"), std::string::npos);

  cli::VerifyOptions v;
  v.in = b.out;
  std::ostringstream vout, verr;
  EXPECT_EQ(cli::RunVerify(v, vout, verr), cli::kExitPass);
  nlohmann::json report = nlohmann::json::parse(vout.str());
  EXPECT_EQ(report["passed"], true);

  // Same flags, same bytes.
  std::string first = Slurp(b.out);
  std::ostringstream again_out, again_err;
  ASSERT_EQ(cli::RunBuild(b, again_out, again_err), cli::kExitPass);
  EXPECT_EQ(Slurp(b.out), first);
}

TEST(Cli, VerifyCorruptedScheme) {
  TempDir dir;
  SchemeSpec spec = BuildCyclicScheme(ProblemParams::Make(5, 5, 3));
  // Bump the W_5 coefficient of the first row; servers without W_5 now use it.
  nlohmann::json j = ToJson(spec);
  auto& entries = j["coeff_matrix"]["entries"];
  entries[4] = (entries[4].get<uint64_t>() + 1) % 2147483647;
  std::string path = dir.File("bad.json");
  std::ofstream(path) << j.dump();
  cli::VerifyOptions v;
  v.in = path;
  std::ostringstream out, err;
  EXPECT_EQ(cli::RunVerify(v, out, err), cli::kExitVerificationFailed);
  nlohmann::json report = nlohmann::json::parse(out.str());
  EXPECT_EQ(report["passed"], false);
  EXPECT_EQ(report["zero_structure"]["ok"], false);
}

TEST(Cli, VerifySampledMode) {
  TempDir dir;
  cli::BuildOptions b;
  b.n = 24;
  b.n_r = 13;
  b.scheme = "frac-rep";
  b.out = dir.File("big.json");
  std::ostringstream out, err;
  ASSERT_EQ(cli::RunBuild(b, out, err), cli::kExitPass);
  cli::VerifyOptions v;
  v.in = b.out;
  v.mode = DecodeMode::kSampled;
  v.sample_count = 2000;
  std::ostringstream vout, verr;
  EXPECT_EQ(cli::RunVerify(v, vout, verr), cli::kExitPass);
  EXPECT_EQ(nlohmann::json::parse(vout.str())["decodability"]["mode"], "sampled");
}

TEST(Cli, ErrorExitCodes) {
  TempDir dir;
  std::ostringstream out, err;
  cli::BuildOptions frac;
  frac.n = 5;
  frac.n_r = 4;
  frac.scheme = "frac-rep";
  EXPECT_EQ(cli::RunBuild(frac, out, err), cli::kExitUsage);

  // F_2 has no element outside {0, 1} for the odd base case.
  cli::BuildOptions binary;
  binary.n = 8;
  binary.n_r = 4;
  binary.field = 2;
  EXPECT_EQ(cli::RunBuild(binary, out, err), cli::kExitUsage);

  cli::BuildOptions small;
  small.n = 10;
  small.n_r = 5;
  small.field = 3;
  EXPECT_EQ(cli::RunBuild(small, out, err), cli::kExitConstructionFailed);

  std::string garbage = dir.File("garbage.json");
  std::ofstream(garbage) << "{ not json";
  cli::VerifyOptions v;
  v.in = garbage;
  EXPECT_EQ(cli::RunVerify(v, out, err), cli::kExitUsage);
  v.in = dir.File("missing.json");
  EXPECT_EQ(cli::RunVerify(v, out, err), cli::kExitUsage);

  cli::ConverseOptions big{9, 3};
  EXPECT_EQ(cli::RunConverse(big, out, err), cli::kExitUsage);
}

TEST(Cli, SweepRows) {
  cli::SweepOptions s{"22..22", "1..22", ""};
  std::ostringstream out, err;
  ASSERT_EQ(cli::RunSweep(s, out, err), cli::kExitPass);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,M_prime,eta_cyclic,eta_combined,eta_floor,optimal_flag");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.rfind("22,11,", 0) == 0) EXPECT_EQ(line, "22,11,11,1,1,1");
    if (line.rfind("22,1,", 0) == 0) EXPECT_EQ(line, "22,1,21,21,21,1");
  }
  EXPECT_EQ(rows, 22);
}

TEST(Cli, Converse) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::RunConverse({5, 3}, out, err), cli::kExitPass);
  EXPECT_NE(out.str().find("min-max chain length: 3"), std::string::npos);
  EXPECT_NE(out.str().find("(match)"), std::string::npos);
  std::ostringstream out4, err4;
  ASSERT_EQ(cli::RunConverse({4, 4}, out4, err4), cli::kExitPass);
  EXPECT_NE(out4.str().find("min-max chain length: 1"), std::string::npos);
}

}  // namespace
}  // namespace seclsc
