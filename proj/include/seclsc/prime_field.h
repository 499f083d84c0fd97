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

#ifndef SECLSC_PRIME_FIELD_H_
#define SECLSC_PRIME_FIELD_H_

#include <cstdint>

namespace seclsc {

// Arithmetic modulo a prime q < 2^32, so products fit in 64 bits.
class PrimeField {
 public:
  static constexpr uint64_t kDefaultModulus = 2147483647;

  explicit PrimeField(uint64_t q = kDefaultModulus);

  uint64_t modulus() const { return q_; }

  uint64_t Add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint64_t Sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + q_ - b; }
  uint64_t Neg(uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  uint64_t Mul(uint64_t a, uint64_t b) const { return (a * b) % q_; }
  uint64_t Pow(uint64_t a, uint64_t e) const;
  // Throws DomainError for a == 0.
  uint64_t Inv(uint64_t a) const;
  uint64_t Reduce(int64_t v) const;

  bool operator==(const PrimeField& other) const = default;

 private:
  uint64_t q_;
};

bool IsPrime(uint64_t n);

}  // namespace seclsc

#endif  // SECLSC_PRIME_FIELD_H_
