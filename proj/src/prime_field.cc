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

#include "seclsc/prime_field.h"

#include <string>

#include "seclsc/errors.h"

namespace seclsc {

namespace {

uint64_t PowMod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = result * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return result;
}

}  // namespace

// Deterministic Miller-Rabin; bases 2, 7, 61 cover every n < 4759123141.
bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t q) : q_(q) {
  if (q >= (uint64_t{1} << 32)) {
    throw UsageError("field modulus must be below 2^32, got " + std::to_string(q));
  }
  if (!IsPrime(q)) throw UsageError("field modulus is not prime: " + std::to_string(q));
}

uint64_t PrimeField::Pow(uint64_t a, uint64_t e) const { return PowMod(a, e, q_); }

uint64_t PrimeField::Inv(uint64_t a) const {
  a %= q_;
  if (a == 0) throw DomainError("inverse of zero");
  return Pow(a, q_ - 2);
}

uint64_t PrimeField::Reduce(int64_t v) const {
  int64_t q = static_cast<int64_t>(q_);
  int64_t r = v % q;
  return static_cast<uint64_t>(r < 0 ? r + q : r);
}

}  // namespace seclsc
