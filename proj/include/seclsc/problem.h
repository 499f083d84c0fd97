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

#ifndef SECLSC_PROBLEM_H_
#define SECLSC_PROBLEM_H_

#include <cstdint>
#include <vector>

#include "seclsc/prime_field.h"

namespace seclsc {

inline constexpr uint64_t kDefaultSeed = 42;

// K datasets, N servers, any N_r of which respond. Every dataset is stored
// on m_prime() = N - N_r + 1 servers and each server stores M of them.
struct ProblemParams {
  int k = 0;
  int n = 0;
  int n_r = 0;
  int m = 0;
  PrimeField field;
  uint64_t seed = kDefaultSeed;

  // Validates and derives M. Throws UsageError on bad input.
  static ProblemParams Make(int k, int n, int n_r, uint64_t q = PrimeField::kDefaultModulus,
                            uint64_t seed = kDefaultSeed);

  int m_prime() const { return n - n_r + 1; }
  int group_size() const { return k / n; }
  void Validate() const;
};

// Datasets grouped into merged messages: group_of[k] is the 0-based group of
// dataset k.
struct Grouping {
  int num_groups = 0;
  std::vector<int> group_of;

  int num_datasets() const { return static_cast<int>(group_of.size()); }
  std::vector<int> Members(int group) const;
  bool operator==(const Grouping&) const = default;
};

// Dataset k joins group k mod N (1-based: Mod(k, N)).
Grouping ModGrouping(const ProblemParams& params);
// Dataset k joins group floor(k / (K/N)); consecutive runs share a group.
Grouping ContiguousGrouping(const ProblemParams& params);

}  // namespace seclsc

#endif  // SECLSC_PROBLEM_H_
