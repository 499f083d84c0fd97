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

#ifndef SECLSC_FIELD_MATRIX_H_
#define SECLSC_FIELD_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "seclsc/prime_field.h"
#include "seclsc/rng.h"

namespace seclsc {

using RowVector = std::vector<uint64_t>;

// Dense row-major matrix of residues. Entries are kept reduced by every
// function in this header; the class itself does not know the modulus.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix Identity(size_t n);
  // Signed entries are reduced into [0, q).
  static FieldMatrix FromSigned(const PrimeField& field,
                                std::initializer_list<std::initializer_list<int64_t>> rows);
  static FieldMatrix FromRows(size_t cols, const std::vector<RowVector>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  uint64_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  uint64_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }

  std::span<const uint64_t> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<uint64_t> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  RowVector RowCopy(size_t r) const { return RowVector(row(r).begin(), row(r).end()); }

  void AppendRow(std::span<const uint64_t> values);

  const std::vector<uint64_t>& entries() const { return data_; }

  bool operator==(const FieldMatrix& other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<uint64_t> data_;
};

// Row reduction of [m | I] that keeps track of how every echelon row was
// formed from the rows of m. Rank, left solving and the left nullspace all
// read off this one elimination.
class LeftReduction {
 public:
  LeftReduction(const PrimeField& field, const FieldMatrix& m);

  size_t rank() const { return pivots_.size(); }
  const std::vector<size_t>& pivot_columns() const { return pivots_; }
  // First rank() rows: reduced row echelon form of m, pivots normalized to 1.
  const FieldMatrix& echelon() const { return echelon_; }
  // Row i holds the coefficients that produce echelon row i from m's rows.
  const FieldMatrix& combination() const { return combo_; }

  std::optional<RowVector> SolveLeft(std::span<const uint64_t> target) const;
  FieldMatrix NullspaceBasis() const;

 private:
  PrimeField field_;
  size_t source_rows_;
  FieldMatrix echelon_;
  FieldMatrix combo_;
  std::vector<size_t> pivots_;
};

size_t Rank(const PrimeField& field, const FieldMatrix& m);

// Some u with u·m = target, or nullopt if target is outside the row space.
std::optional<RowVector> SolveLeft(const PrimeField& field, const FieldMatrix& m,
                                   std::span<const uint64_t> target);

// Rows form a basis of {v : v·m = 0}; zero rows when m has full row rank.
FieldMatrix LeftNullspaceBasis(const PrimeField& field, const FieldMatrix& m);

RowVector MultiplyRow(const PrimeField& field, std::span<const uint64_t> u, const FieldMatrix& m);
FieldMatrix Multiply(const PrimeField& field, const FieldMatrix& a, const FieldMatrix& b);

FieldMatrix SelectRows(const FieldMatrix& m, std::span<const size_t> rows);
FieldMatrix SelectColumns(const FieldMatrix& m, std::span<const size_t> cols);
FieldMatrix HStack(const FieldMatrix& a, const FieldMatrix& b);

struct CellExclusion {
  size_t row;
  size_t col;
  std::vector<uint64_t> residues;
};

// Uniform i.i.d. entries; cells named in `exclusions` avoid the listed residues.
FieldMatrix SampleMatrix(const PrimeField& field, size_t rows, size_t cols, Rng& rng,
                         std::span<const CellExclusion> exclusions = {});

}  // namespace seclsc

#endif  // SECLSC_FIELD_MATRIX_H_
