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

#ifndef SECLSC_RNG_H_
#define SECLSC_RNG_H_

#include <cstdint>
#include <random>
#include <span>

#include "seclsc/prime_field.h"

namespace seclsc {

// The single source of randomness. Bounded draws use rejection on the raw
// mt19937_64 stream, so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound);
  uint64_t Element(const PrimeField& field) { return Below(field.modulus()); }
  // Uniform over the field minus `excluded`. Throws DomainError when nothing
  // is left to draw from.
  uint64_t ElementExcluding(const PrimeField& field, std::span<const uint64_t> excluded);

 private:
  std::mt19937_64 engine_;
};

}  // namespace seclsc

#endif  // SECLSC_RNG_H_
