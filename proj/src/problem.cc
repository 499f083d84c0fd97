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

#include "seclsc/problem.h"

#include <string>

#include "seclsc/errors.h"

namespace seclsc {

ProblemParams ProblemParams::Make(int k, int n, int n_r, uint64_t q, uint64_t seed) {
  ProblemParams p{.k = k, .n = n, .n_r = n_r, .m = 0, .field = PrimeField(q), .seed = seed};
  if (n < 1) throw UsageError("N must be at least 1");
  if (k < 1 || k % n != 0) {
    throw UsageError("K must be a positive multiple of N (K=" + std::to_string(k) +
                     ", N=" + std::to_string(n) + ")");
  }
  if (n_r < 1 || n_r > n) throw UsageError("N_r must lie in [1, N]");
  p.m = (k / n) * p.m_prime();
  return p;
}

void ProblemParams::Validate() const {
  ProblemParams fresh = Make(k, n, n_r, field.modulus(), seed);
  if (fresh.m != m) {
    throw UsageError("M must equal (K/N)(N-N_r+1) = " + std::to_string(fresh.m));
  }
}

std::vector<int> Grouping::Members(int group) const {
  std::vector<int> out;
  for (int k = 0; k < num_datasets(); ++k) {
    if (group_of[k] == group) out.push_back(k);
  }
  return out;
}

Grouping ModGrouping(const ProblemParams& params) {
  Grouping g{.num_groups = params.n, .group_of = std::vector<int>(params.k)};
  for (int k = 0; k < params.k; ++k) g.group_of[k] = k % params.n;
  return g;
}

Grouping ContiguousGrouping(const ProblemParams& params) {
  Grouping g{.num_groups = params.n, .group_of = std::vector<int>(params.k)};
  for (int k = 0; k < params.k; ++k) g.group_of[k] = k / params.group_size();
  return g;
}

}  // namespace seclsc
