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

#include "seclsc/h_recursion.h"

#include <array>
#include <numeric>
#include <utility>

#include "seclsc/errors.h"

namespace seclsc {

namespace {

constexpr std::array<std::pair<HRule, const char*>, 6> kRuleNames = {{
    {HRule::kBaseRep, "base-rep"},
    {HRule::kGcd, "gcd"},
    {HRule::kBlocks, "blocks"},
    {HRule::kEven, "even"},
    {HRule::kOddBase, "odd-base"},
    {HRule::kReflect, "reflect"},
}};

// The step the recursion takes from (n, m).
HStep NextStep(int n, int m) {
  int g = std::gcd(n, m);
  if (g > 1) return {HRule::kGcd, n, m, n / g, m / g};
  if (m == 1) return {HRule::kBaseRep, n, m, n, m};
  if (n > 2 * m) {
    int blocks = n / m - 1;
    return {HRule::kBlocks, n, m, n - blocks * m, m};
  }
  if (2 * n < 3 * m) return {HRule::kReflect, n, m, m, 2 * m - n};
  if (m % 2 == 0) return {HRule::kEven, n, m, n - m, m / 2};
  return {HRule::kOddBase, n, m, n, m};
}

// Contribution of one step to h.
int StepValue(const HStep& s) {
  switch (s.rule) {
    case HRule::kBaseRep:
      return s.n;
    case HRule::kBlocks:
      return (s.n - s.n_after) / s.m;
    case HRule::kEven:
      return 1;
    case HRule::kOddBase:
      return s.n - (3 * s.m - 5) / 2;
    case HRule::kGcd:
    case HRule::kReflect:
      return 0;
  }
  return 0;
}

bool IsTerminal(HRule r) { return r == HRule::kBaseRep || r == HRule::kOddBase; }

}  // namespace

std::string RuleName(HRule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "?";
}

HRule RuleFromName(const std::string& name) {
  for (const auto& [r, n] : kRuleNames) {
    if (name == n) return r;
  }
  throw ParseError("unknown recursion rule: " + name);
}

HRecursionTrace HValue(int n, int m_prime) {
  if (n < 1 || m_prime < 1 || m_prime > n) throw UsageError("h(N, M') needs 1 <= M' <= N");
  HRecursionTrace trace;
  int a = n;
  int b = m_prime;
  while (true) {
    HStep s = NextStep(a, b);
    trace.steps.push_back(s);
    trace.value += StepValue(s);
    if (IsTerminal(s.rule)) break;
    a = s.n_after;
    b = s.m_after;
  }
  return trace;
}

int ReplayTrace(const HRecursionTrace& trace) {
  if (trace.steps.empty()) throw IntegrityError("empty recursion trace");
  int value = 0;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const HStep& s = trace.steps[i];
    if (!(NextStep(s.n, s.m) == s)) throw IntegrityError("trace step does not follow the recursion");
    if (i > 0) {
      const HStep& prev = trace.steps[i - 1];
      if (prev.n_after != s.n || prev.m_after != s.m) throw IntegrityError("trace steps do not chain");
    }
    bool last = i + 1 == trace.steps.size();
    if (IsTerminal(s.rule) != last) throw IntegrityError("trace must end at its only terminal step");
    value += StepValue(s);
  }
  if (value != trace.value) throw IntegrityError("trace value does not match its steps");
  return value;
}

bool CombinedSchemeOptimal(int n, int m_prime) { return m_prime / std::gcd(n, m_prime) <= 4; }

}  // namespace seclsc
