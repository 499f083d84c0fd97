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

#ifndef SECLSC_ENUMERATE_H_
#define SECLSC_ENUMERATE_H_

#include <cstdint>
#include <functional>

#include "seclsc/assignment.h"

namespace seclsc {

inline constexpr int kMaxEnumerationServers = 8;
inline constexpr int kMaxEnumerationReplication = 5;

// Visits every M'-regular assignment of N datasets to N servers once per
// server-relabeling class (rows in non-decreasing order). The visitor returns
// false to stop early. Returns the number of assignments visited.
// Throws LimitExceeded above N = 8 or M' = 5.
uint64_t ForEachAssignment(int n, int m_prime, const std::function<bool(const Assignment&)>& visit);

struct ConverseResult {
  int min_max_chain = 0;
  Assignment witness;
  uint64_t examined = 0;
};

// min over assignments of the longest chain. Every maximal chain covers all N
// datasets M' at a time, so ceil(N/M') is a floor and the search stops there
// when `stop_at_floor` is set.
ConverseResult ConverseMinMax(int n, int m_prime, bool stop_at_floor = true);

}  // namespace seclsc

#endif  // SECLSC_ENUMERATE_H_
