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

#ifndef SECLSC_CHAIN_H_
#define SECLSC_CHAIN_H_

#include <vector>

#include "seclsc/assignment.h"

namespace seclsc {

// Ordered servers s_1..s_v where each s_i stores witnesses[i], a dataset none
// of s_1..s_{i-1} stores.
struct ChainCertificate {
  std::vector<int> servers;
  std::vector<int> witnesses;

  int length() const { return static_cast<int>(servers.size()); }
};

enum class ChainMode { kExact, kGreedy };

inline constexpr int kMaxExactChainServers = 20;

// Exact mode: memoized search over covered-dataset sets, ties to the lowest
// server index; refuses (LimitExceeded) above kMaxExactChainServers servers.
// Greedy mode: repeatedly takes the server adding the fewest new datasets
// (at least one), lowest index on ties. Both need at most 64 datasets.
ChainCertificate FindLongestChain(const Assignment& a, ChainMode mode);

bool VerifyChain(const Assignment& a, const ChainCertificate& chain);

}  // namespace seclsc

#endif  // SECLSC_CHAIN_H_
