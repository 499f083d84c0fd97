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

#include <gtest/gtest.h>

#include "seclsc/errors.h"
#include "seclsc/field_matrix.h"
#include "seclsc/prime_field.h"
#include "seclsc/rng.h"
#include "support/oracle.h"

namespace seclsc {
namespace {

TEST(PrimeField, SmallFieldArithmetic) {
  PrimeField f3(3);
  EXPECT_EQ(f3.Mul(2, 2), 1u);
  EXPECT_EQ(f3.Inv(2), 2u);
  EXPECT_EQ(f3.Sub(0, 1), 2u);
  EXPECT_EQ(f3.Reduce(-1), 2u);
  EXPECT_EQ(f3.Reduce(-7), 2u);
  EXPECT_THROW(f3.Inv(0), DomainError);
}

TEST(PrimeField, RejectsCompositeAndOversizedModuli) {
  EXPECT_THROW(PrimeField(9), UsageError);
  EXPECT_THROW(PrimeField(1), UsageError);
  EXPECT_THROW(PrimeField(4294967311ull), UsageError);
  EXPECT_NO_THROW(PrimeField(4294967291ull));
}

TEST(PrimeField, InversesExhaustiveForSmallPrimes) {
  for (uint64_t q = 2; q <= 101; ++q) {
    if (!IsPrime(q)) continue;
    PrimeField f(q);
    for (uint64_t a = 1; a < q; ++a) {
      ASSERT_EQ(f.Mul(a, f.Inv(a)), 1u) << "q=" << q << " a=" << a;
      ASSERT_EQ(f.Inv(a), testing::ExtendedEuclidInverse(a, q));
    }
  }
}

TEST(PrimeField, InversesMatchEuclidOnDefaultField) {
  PrimeField f;
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    uint64_t a = 1 + rng.Below(f.modulus() - 1);
    ASSERT_EQ(f.Mul(a, f.Inv(a)), 1u);
    ASSERT_EQ(f.Inv(a), testing::ExtendedEuclidInverse(a, f.modulus()));
  }
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (uint64_t n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    ASSERT_EQ(IsPrime(n), trial) << n;
  }
  EXPECT_TRUE(IsPrime(2147483647));
}

TEST(Rank, Examples) {
  PrimeField f7(7);
  EXPECT_EQ(Rank(f7, FieldMatrix::Identity(4)), 4u);
  PrimeField f3(3);
  EXPECT_EQ(Rank(f3, FieldMatrix::FromSigned(f3, {{2, 1, 0, 1}, {0, 1, 2, -1}})), 2u);
  EXPECT_EQ(Rank(f3, FieldMatrix(3, 5)), 0u);
}

TEST(Rank, MatchesColumnPivotOracle) {
  Rng rng(11);
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 2147483647ull}) {
    PrimeField f(q);
    for (int trial = 0; trial < 200; ++trial) {
      size_t rows = 1 + rng.Below(6), cols = 1 + rng.Below(6);
      FieldMatrix m = SampleMatrix(f, rows, cols, rng);
      // Duplicate a row now and then to force rank deficiency.
      if (rows > 1 && trial % 3 == 0) {
        for (size_t c = 0; c < cols; ++c) m(rows - 1, c) = f.Mul(m(0, c), 2 % q);
      }
      ASSERT_EQ(Rank(f, m), testing::ColumnPivotRank(f, m));
    }
  }
}

TEST(SolveLeft, Examples) {
  PrimeField f5(5);
  RowVector target = {1, 2, 0};
  auto u = SolveLeft(f5, FieldMatrix::Identity(3), target);
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, target);

  PrimeField f3(3);
  FieldMatrix fig = FieldMatrix::FromSigned(f3, {{2, 1, 0, 1}, {0, 1, 2, -1}});
  RowVector sum = {1, 1, 1, 0};
  auto v = SolveLeft(f3, fig, sum);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (RowVector{2, 2}));
  RowVector doubled = {2, 2, 2, 0};
  EXPECT_EQ(*SolveLeft(f3, fig, doubled), (RowVector{1, 1}));

  FieldMatrix rank1 = FieldMatrix::FromSigned(f5, {{1, 2}, {2, 4}});
  RowVector outside = {0, 1};
  EXPECT_FALSE(SolveLeft(f5, rank1, outside));
}

TEST(SolveLeft, RejectsDimensionMismatch) {
  PrimeField f5(5);
  RowVector target = {1, 2};
  EXPECT_THROW(SolveLeft(f5, FieldMatrix::Identity(3), target), UsageError);
}

TEST(SolveLeft, PropertiesOnRandomMatrices) {
  Rng rng(3);
  PrimeField f(5);
  for (int trial = 0; trial < 300; ++trial) {
    size_t rows = 1 + rng.Below(5), cols = 1 + rng.Below(5);
    FieldMatrix m = SampleMatrix(f, rows, cols, rng);
    RowVector target(cols);
    for (auto& t : target) t = rng.Element(f);
    auto u = SolveLeft(f, m, target);
    if (u) {
      ASSERT_EQ(MultiplyRow(f, *u, m), target);
    } else {
      FieldMatrix aug = m;
      aug.AppendRow(target);
      ASSERT_EQ(Rank(f, aug), Rank(f, m) + 1);
    }
  }
}

TEST(LeftNullspace, Examples) {
  PrimeField f5(5);
  FieldMatrix ones = FieldMatrix::FromSigned(f5, {{1}, {1}});
  FieldMatrix basis = LeftNullspaceBasis(f5, ones);
  ASSERT_EQ(basis.rows(), 1u);
  EXPECT_EQ(f5.Mul(basis(0, 1), f5.Inv(basis(0, 0))), 4u);
  EXPECT_EQ(LeftNullspaceBasis(f5, FieldMatrix::Identity(3)).rows(), 0u);
}

TEST(LeftNullspace, IndependentAndAnnihilating) {
  Rng rng(5);
  PrimeField f(7);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = 1 + rng.Below(6), cols = 1 + rng.Below(4);
    FieldMatrix m = SampleMatrix(f, rows, cols, rng);
    FieldMatrix basis = LeftNullspaceBasis(f, m);
    ASSERT_EQ(basis.rows(), rows - Rank(f, m));
    if (basis.rows() == 0) continue;
    ASSERT_EQ(Rank(f, basis), basis.rows());
    FieldMatrix product = Multiply(f, basis, m);
    for (uint64_t v : product.entries()) ASSERT_EQ(v, 0u);
  }
}

TEST(LeftNullspace, OneVectorForCyclicSubmatrix) {
  // N_r rows of a sampled coefficient block restricted to N_r - 1 columns.
  PrimeField f;
  Rng rng(42);
  for (int n_r = 2; n_r <= 8; ++n_r) {
    FieldMatrix m = SampleMatrix(f, n_r, n_r - 1, rng);
    EXPECT_EQ(LeftNullspaceBasis(f, m).rows(), 1u);
  }
}

TEST(SampleMatrix, Deterministic) {
  PrimeField f7(7);
  Rng a(99), b(99);
  EXPECT_EQ(SampleMatrix(f7, 2, 2, a), SampleMatrix(f7, 2, 2, b));
}

TEST(SampleMatrix, HonorsExclusions) {
  PrimeField f5(5);
  Rng rng(1);
  std::vector<CellExclusion> ex = {{0, 0, {0, 1}}};
  for (int i = 0; i < 500; ++i) {
    FieldMatrix m = SampleMatrix(f5, 1, 2, rng, ex);
    ASSERT_GE(m(0, 0), 2u);
  }
  std::vector<CellExclusion> all = {{0, 0, {0, 1, 2, 3, 4}}};
  EXPECT_THROW(SampleMatrix(f5, 1, 1, rng, all), DomainError);
}

TEST(SampleMatrix, LargeFieldSquareMatricesAreFullRank) {
  PrimeField f;
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(Rank(f, SampleMatrix(f, 5, 5, rng)), 5u);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(0);
  for (uint64_t bound : {1ull, 2ull, 3ull, 1000ull}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.Below(bound), bound);
  }
}

}  // namespace
}  // namespace seclsc
