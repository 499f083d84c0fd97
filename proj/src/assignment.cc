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

#include "seclsc/assignment.h"

#include <algorithm>
#include <string>

#include "seclsc/errors.h"

namespace seclsc {

Assignment::Assignment(int num_datasets, std::vector<std::vector<int>> sets)
    : num_datasets_(num_datasets), sets_(std::move(sets)) {
  for (auto& z : sets_) {
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    if (!z.empty() && (z.front() < 0 || z.back() >= num_datasets_)) {
      throw UsageError("assignment refers to a dataset outside [1, " +
                       std::to_string(num_datasets_) + "]");
    }
  }
}

bool Assignment::Holds(int server, int dataset) const {
  return std::binary_search(sets_[server].begin(), sets_[server].end(), dataset);
}

uint64_t Assignment::Mask(int server) const {
  if (num_datasets_ > 64) throw LimitExceeded("bitmask view needs at most 64 datasets");
  uint64_t mask = 0;
  for (int k : sets_[server]) mask |= uint64_t{1} << k;
  return mask;
}

int Assignment::Replication(int dataset) const {
  int count = 0;
  for (int n = 0; n < num_servers(); ++n) count += Holds(n, dataset) ? 1 : 0;
  return count;
}

bool Assignment::IsRegular(int per_server, int replication) const {
  std::vector<int> count(num_datasets_, 0);
  for (const auto& z : sets_) {
    if (static_cast<int>(z.size()) != per_server) return false;
    for (int k : z) ++count[k];
  }
  return std::all_of(count.begin(), count.end(), [&](int c) { return c == replication; });
}

void Assignment::CheckRegular(int per_server, int replication) const {
  if (!IsRegular(per_server, replication)) {
    throw ContractViolation("assignment is not regular: expected |Z_n| = " +
                            std::to_string(per_server) + " and replication " +
                            std::to_string(replication));
  }
}

Assignment CyclicAssignment(const ProblemParams& params) {
  std::vector<std::vector<int>> groups(params.n);
  for (int s = 0; s < params.n; ++s) {
    for (int j = 0; j < params.m_prime(); ++j) groups[s].push_back((s + j) % params.n);
  }
  Assignment a = ExpandAssignment(Assignment(params.n, std::move(groups)), ModGrouping(params));
  a.CheckRegular(params.m, params.m_prime());
  return a;
}

Assignment FractionalRepetitionAssignment(const ProblemParams& params) {
  const int mp = params.m_prime();
  if (params.n % mp != 0) {
    throw UnsupportedParameters("fractional repetition needs M' = " + std::to_string(mp) +
                                " to divide N = " + std::to_string(params.n));
  }
  const int blocks = params.n / mp;
  const int block_datasets = params.k / blocks;
  std::vector<std::vector<int>> sets(params.n);
  for (int s = 0; s < params.n; ++s) {
    int b = s / mp;
    for (int k = b * block_datasets; k < (b + 1) * block_datasets; ++k) sets[s].push_back(k);
  }
  Assignment a(params.k, std::move(sets));
  a.CheckRegular(params.m, mp);
  return a;
}

Assignment ExpandAssignment(const Assignment& merged, const Grouping& grouping) {
  if (merged.num_datasets() != grouping.num_groups) {
    throw UsageError("ExpandAssignment: group count mismatch");
  }
  std::vector<std::vector<int>> sets(merged.num_servers());
  for (int s = 0; s < merged.num_servers(); ++s) {
    for (int k = 0; k < grouping.num_datasets(); ++k) {
      if (merged.Holds(s, grouping.group_of[k])) sets[s].push_back(k);
    }
  }
  return Assignment(grouping.num_datasets(), std::move(sets));
}

Assignment MergeAssignment(const Assignment& datasets, const Grouping& grouping) {
  if (datasets.num_datasets() != grouping.num_datasets()) {
    throw UsageError("MergeAssignment: dataset count mismatch");
  }
  std::vector<std::vector<int>> sets(datasets.num_servers());
  for (int s = 0; s < datasets.num_servers(); ++s) {
    for (int g = 0; g < grouping.num_groups; ++g) {
      auto members = grouping.Members(g);
      bool all = !members.empty() && std::all_of(members.begin(), members.end(), [&](int k) {
        return datasets.Holds(s, k);
      });
      if (all) sets[s].push_back(g);
    }
  }
  return Assignment(grouping.num_groups, std::move(sets));
}

}  // namespace seclsc
