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

#include "seclsc/enumerate.h"

#include <algorithm>
#include <string>
#include <vector>

#include "seclsc/chain.h"
#include "seclsc/errors.h"

namespace seclsc {

namespace {

// All M'-subsets of [N] in lexicographic order of their sorted elements.
std::vector<std::vector<int>> Subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

class Enumerator {
 public:
  Enumerator(int n, int m_prime, const std::function<bool(const Assignment&)>& visit)
      : n_(n), mp_(m_prime), visit_(visit), rows_(Subsets(n, m_prime)), count_(n, 0) {}

  uint64_t Run() {
    Extend(0);
    return visited_;
  }

 private:
  // Returns false once the visitor asks to stop.
  bool Extend(size_t first) {
    const int placed = static_cast<int>(chosen_.size());
    if (placed == n_) {
      std::vector<std::vector<int>> sets;
      for (size_t r : chosen_) sets.push_back(rows_[r]);
      ++visited_;
      return visit_(Assignment(n_, std::move(sets)));
    }
    const int remaining_after = n_ - placed - 1;
    for (size_t r = first; r < rows_.size(); ++r) {
      bool fits = std::all_of(rows_[r].begin(), rows_[r].end(), [&](int k) { return count_[k] < mp_; });
      if (!fits) continue;
      for (int k : rows_[r]) ++count_[k];
      bool feasible = true;
      for (int k = 0; k < n_ && feasible; ++k) feasible = mp_ - count_[k] <= remaining_after;
      bool keep_going = true;
      if (feasible) {
        chosen_.push_back(r);
        keep_going = Extend(r);
        chosen_.pop_back();
      }
      for (int k : rows_[r]) --count_[k];
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  int mp_;
  const std::function<bool(const Assignment&)>& visit_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> count_;
  std::vector<size_t> chosen_;
  uint64_t visited_ = 0;
};

void CheckLimits(int n, int m_prime) {
  if (m_prime < 1 || m_prime > n) throw UsageError("M' must lie in [1, N]");
  if (n > kMaxEnumerationServers || m_prime > kMaxEnumerationReplication) {
    throw LimitExceeded("assignment enumeration supports N <= " +
                        std::to_string(kMaxEnumerationServers) + " and M' <= " +
                        std::to_string(kMaxEnumerationReplication));
  }
}

}  // namespace

uint64_t ForEachAssignment(int n, int m_prime, const std::function<bool(const Assignment&)>& visit) {
  CheckLimits(n, m_prime);
  return Enumerator(n, m_prime, visit).Run();
}

ConverseResult ConverseMinMax(int n, int m_prime, bool stop_at_floor) {
  CheckLimits(n, m_prime);
  const int floor = (n + m_prime - 1) / m_prime;
  ConverseResult result;
  result.min_max_chain = n + 1;
  result.examined = ForEachAssignment(n, m_prime, [&](const Assignment& a) {
    int len = FindLongestChain(a, ChainMode::kExact).length();
    if (len < result.min_max_chain) {
      result.min_max_chain = len;
      result.witness = a;
    }
    return !(stop_at_floor && result.min_max_chain <= floor);
  });
  return result;
}

}  // namespace seclsc
