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

#include "seclsc/rng.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "seclsc/errors.h"

namespace seclsc {

uint64_t Rng::Below(uint64_t bound) {
  if (bound == 0) throw UsageError("Rng::Below: bound must be positive");
  const uint64_t max = std::numeric_limits<uint64_t>::max();
  const uint64_t limit = max - (max % bound + 1) % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

uint64_t Rng::ElementExcluding(const PrimeField& field, std::span<const uint64_t> excluded) {
  std::vector<uint64_t> distinct;
  for (uint64_t e : excluded) {
    if (e < field.modulus()) distinct.push_back(e);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() >= field.modulus()) {
    throw DomainError("exclusion set covers the whole field");
  }
  while (true) {
    uint64_t x = Element(field);
    if (!std::binary_search(distinct.begin(), distinct.end(), x)) return x;
  }
}

}  // namespace seclsc
