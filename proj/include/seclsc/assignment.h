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

#ifndef SECLSC_ASSIGNMENT_H_
#define SECLSC_ASSIGNMENT_H_

#include <cstdint>
#include <vector>

#include "seclsc/problem.h"

namespace seclsc {

// Z_n for every server n: sorted, duplicate-free, 0-based dataset indices.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int num_datasets, std::vector<std::vector<int>> sets);

  int num_servers() const { return static_cast<int>(sets_.size()); }
  int num_datasets() const { return num_datasets_; }
  const std::vector<int>& set(int server) const { return sets_[server]; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  bool Holds(int server, int dataset) const;
  // Bitmask of Z_n; requires num_datasets() <= 64.
  uint64_t Mask(int server) const;
  int Replication(int dataset) const;

  bool IsRegular(int per_server, int replication) const;
  // Throws ContractViolation unless every |Z_n| = per_server and every
  // dataset is stored `replication` times.
  void CheckRegular(int per_server, int replication) const;

  bool operator==(const Assignment&) const = default;

 private:
  int num_datasets_ = 0;
  std::vector<std::vector<int>> sets_;
};

// Server n holds merged groups n, n+1, ..., n+N-N_r (mod N), expanded to datasets
// through the Mod grouping.
Assignment CyclicAssignment(const ProblemParams& params);

// N/M' blocks of M' servers; block i stores the i-th contiguous run of K/(N/M')
// datasets. Throws UnsupportedParameters unless M' divides N.
Assignment FractionalRepetitionAssignment(const ProblemParams& params);

// Group-level assignment to dataset level: a server stores every dataset of
// every group it holds.
Assignment ExpandAssignment(const Assignment& merged, const Grouping& grouping);
// Dataset level to group level: a server holds a group when it stores all of
// the group's datasets.
Assignment MergeAssignment(const Assignment& datasets, const Grouping& grouping);

}  // namespace seclsc

#endif  // SECLSC_ASSIGNMENT_H_
