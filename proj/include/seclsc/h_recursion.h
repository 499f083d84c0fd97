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

#ifndef SECLSC_H_RECURSION_H_
#define SECLSC_H_RECURSION_H_

#include <string>
#include <vector>

namespace seclsc {

enum class HRule { kBaseRep, kGcd, kBlocks, kEven, kOddBase, kReflect };

std::string RuleName(HRule rule);
// Throws ParseError for unknown names.
HRule RuleFromName(const std::string& name);

// One reduction (n, m) -> (n_after, m_after). Terminal rules keep the pair.
struct HStep {
  HRule rule;
  int n;
  int m;
  int n_after;
  int m_after;

  bool operator==(const HStep&) const = default;
};

struct HRecursionTrace {
  std::vector<HStep> steps;
  int value = 0;

  bool operator==(const HRecursionTrace&) const = default;
};

// h(N, M'): the number of independent combinations sent by the combined
// scheme. Throws UsageError unless 1 <= M' <= N.
HRecursionTrace HValue(int n, int m_prime);

// Recomputes the value from the steps alone, checking that each step is the
// rule the recursion would apply. Throws IntegrityError on inconsistency.
int ReplayTrace(const HRecursionTrace& trace);

// M'/gcd(N, M') <= 4, where the combined scheme is known to be optimal.
bool CombinedSchemeOptimal(int n, int m_prime);

}  // namespace seclsc

#endif  // SECLSC_H_RECURSION_H_
