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

#ifndef SECLSC_CLI_H_
#define SECLSC_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "seclsc/problem.h"
#include "seclsc/verifier.h"

namespace seclsc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConstructionFailed = 3;

struct DemoOptions {
  uint64_t field = 3;
  uint64_t seed = kDefaultSeed;
};

struct BuildOptions {
  int n = 0;
  int n_r = 0;
  std::optional<int> k;  // defaults to n
  std::string scheme = "combined";
  uint64_t field = PrimeField::kDefaultModulus;
  uint64_t seed = kDefaultSeed;
  std::string out;  // empty: JSON to stdout
};

struct VerifyOptions {
  std::string in;
  std::optional<DecodeMode> mode;
  uint64_t sample_count = kDefaultSampleCount;
};

struct SweepOptions {
  std::string n_range;
  std::string m_range;
  std::string out;  // empty: CSV to stdout
};

struct ConverseOptions {
  int n = 0;
  int m = 0;
};

// "a..b" or "a"; throws UsageError otherwise.
std::pair<int, int> ParseRange(const std::string& text);

int RunDemo(const DemoOptions& options, std::ostream& out, std::ostream& err);
int RunBuild(const BuildOptions& options, std::ostream& out, std::ostream& err);
int RunVerify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int RunSweep(const SweepOptions& options, std::ostream& out, std::ostream& err);
int RunConverse(const ConverseOptions& options, std::ostream& out, std::ostream& err);

}  // namespace seclsc::cli

#endif  // SECLSC_CLI_H_
