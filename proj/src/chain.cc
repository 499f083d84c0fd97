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

#include "seclsc/chain.h"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "seclsc/errors.h"

namespace seclsc {

namespace {

class ExactChainSearch {
 public:
  explicit ExactChainSearch(const Assignment& a) {
    for (int s = 0; s < a.num_servers(); ++s) masks_.push_back(a.Mask(s));
  }

  int Longest(uint64_t covered) {
    auto it = memo_.find(covered);
    if (it != memo_.end()) return it->second;
    int best = 0;
    for (uint64_t z : masks_) {
      if ((z & ~covered) == 0) continue;
      best = std::max(best, 1 + Longest(covered | z));
    }
    memo_.emplace(covered, best);
    return best;
  }

  ChainCertificate Reconstruct() {
    ChainCertificate chain;
    uint64_t covered = 0;
    int remaining = Longest(0);
    while (remaining > 0) {
      for (size_t s = 0; s < masks_.size(); ++s) {
        uint64_t fresh = masks_[s] & ~covered;
        if (fresh == 0 || 1 + Longest(covered | masks_[s]) != remaining) continue;
        chain.servers.push_back(static_cast<int>(s));
        chain.witnesses.push_back(std::countr_zero(fresh));
        covered |= masks_[s];
        break;
      }
      --remaining;
    }
    return chain;
  }

 private:
  std::vector<uint64_t> masks_;
  std::unordered_map<uint64_t, int> memo_;
};

ChainCertificate GreedyChain(const Assignment& a) {
  ChainCertificate chain;
  uint64_t covered = 0;
  std::vector<bool> used(a.num_servers(), false);
  while (true) {
    int pick = -1;
    int pick_fresh = 0;
    for (int s = 0; s < a.num_servers(); ++s) {
      if (used[s]) continue;
      int fresh = std::popcount(a.Mask(s) & ~covered);
      if (fresh > 0 && (pick < 0 || fresh < pick_fresh)) {
        pick = s;
        pick_fresh = fresh;
      }
    }
    if (pick < 0) break;
    used[pick] = true;
    chain.servers.push_back(pick);
    chain.witnesses.push_back(std::countr_zero(a.Mask(pick) & ~covered));
    covered |= a.Mask(pick);
  }
  return chain;
}

}  // namespace

ChainCertificate FindLongestChain(const Assignment& a, ChainMode mode) {
  if (a.num_datasets() > 64) throw LimitExceeded("chain search supports at most 64 datasets");
  ChainCertificate chain;
  if (mode == ChainMode::kExact) {
    if (a.num_servers() > kMaxExactChainServers) {
      throw LimitExceeded("exact chain search supports at most " +
                          std::to_string(kMaxExactChainServers) + " servers; use greedy");
    }
    chain = ExactChainSearch(a).Reconstruct();
  } else {
    chain = GreedyChain(a);
  }
  if (!VerifyChain(a, chain)) throw IntegrityError("chain search produced an invalid certificate");
  return chain;
}

bool VerifyChain(const Assignment& a, const ChainCertificate& chain) {
  if (chain.servers.size() != chain.witnesses.size()) return false;
  std::vector<bool> seen_server(a.num_servers(), false);
  std::vector<bool> covered(a.num_datasets(), false);
  for (size_t i = 0; i < chain.servers.size(); ++i) {
    int s = chain.servers[i];
    int w = chain.witnesses[i];
    if (s < 0 || s >= a.num_servers() || seen_server[s]) return false;
    if (w < 0 || w >= a.num_datasets() || !a.Holds(s, w) || covered[w]) return false;
    seen_server[s] = true;
    for (int k : a.set(s)) covered[k] = true;
  }
  return true;
}

}  // namespace seclsc
