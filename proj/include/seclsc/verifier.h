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

#ifndef SECLSC_VERIFIER_H_
#define SECLSC_VERIFIER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seclsc/chain.h"
#include "seclsc/scheme.h"

namespace seclsc {

enum class DecodeMode { kExhaustive, kSampled };

std::string DecodeModeName(DecodeMode mode);

inline constexpr uint64_t kMaxExhaustiveSubsets = 5'000'000;
inline constexpr uint64_t kDefaultSampleCount = 10'000;
inline constexpr size_t kMaxReportedFailures = 20;

uint64_t Binomial(int n, int k);

struct ZeroStructureResult {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // (server, merged message)
};

struct DecodabilityResult {
  bool decodable = true;
  DecodeMode mode = DecodeMode::kExhaustive;
  uint64_t subsets_checked = 0;
  uint64_t failure_count = 0;
  // First failures in lexicographic order, at most kMaxReportedFailures.
  std::vector<std::vector<int>> failing_subsets;
};

struct SecurityResult {
  bool secure = true;
  int rho = 0;           // rank of all answers together
  int q_block_rank = 0;  // rank of their randomness columns
  int kernel_dim = 0;    // independent randomness-free combinations
  bool sum_revealed = false;
  // Message part of a randomness-free combination that is not a multiple of
  // the sum; empty when secure.
  RowVector leaked_direction;
};

struct CostResult {
  int communication_cost = 0;
  int randomness_size = 0;
  int lambda_measured = 0;
};

struct ChainConsistency {
  int chain_length = 0;
  bool exact = false;
  bool optimality_applies = false;
  int h_value = 0;
  bool consistent = false;
  ChainCertificate certificate;
};

ZeroStructureResult CheckZeroStructure(const SchemeSpec& spec);

// Exhaustive mode throws LimitExceeded when C(N, N_r) > kMaxExhaustiveSubsets.
// Sampled mode checks `sample_count` distinct subsets drawn with `seed`.
DecodabilityResult CheckDecodability(const SchemeSpec& spec, DecodeMode mode,
                                     uint64_t sample_count = kDefaultSampleCount,
                                     uint64_t seed = kDefaultSeed);
// Exhaustive when feasible, sampled otherwise.
DecodeMode DefaultDecodeMode(const SchemeSpec& spec);

SecurityResult CheckSecurity(const SchemeSpec& spec);

// Throws IntegrityError if the measured rank disagrees with spec.lambda.
CostResult MeasureCosts(const SchemeSpec& spec);

// Chains are searched on the merged-message assignment; exact up to
// kMaxExactChainServers servers, greedy beyond.
ChainConsistency CheckChainConsistency(const SchemeSpec& spec);

struct VerifyOptions {
  std::optional<DecodeMode> mode;  // unset: DefaultDecodeMode
  uint64_t sample_count = kDefaultSampleCount;
  uint64_t sample_seed = kDefaultSeed;
  bool check_chain = true;
};

struct VerificationReport {
  std::string scheme;
  ProblemParams params;
  ZeroStructureResult zero_structure;
  DecodabilityResult decodability;
  SecurityResult security;
  CostResult costs;
  bool lambda_consistent = true;
  std::optional<ChainConsistency> chain;

  // Decodable, secure, zero-structure respected, cost N_r, rank = lambda.
  bool passed() const;
};

VerificationReport Verify(const SchemeSpec& spec, const VerifyOptions& options = {});

}  // namespace seclsc

#endif  // SECLSC_VERIFIER_H_
