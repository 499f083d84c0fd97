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

#include "seclsc/field_matrix.h"

#include <algorithm>
#include <string>
#include <utility>

#include "seclsc/errors.h"

namespace seclsc {

namespace {

// dst -= f * src, over all columns.
void SubtractScaled(const PrimeField& field, std::span<uint64_t> dst, std::span<const uint64_t> src,
                    uint64_t f) {
  const uint64_t q = field.modulus();
  const uint64_t neg = field.Neg(f);
  for (size_t c = 0; c < dst.size(); ++c) {
    if (src[c] != 0) dst[c] = (dst[c] + neg * src[c]) % q;
  }
}

void Scale(const PrimeField& field, std::span<uint64_t> v, uint64_t f) {
  for (auto& x : v) x = field.Mul(x, f);
}

void SwapRows(FieldMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  std::swap_ranges(m.row(a).begin(), m.row(a).end(), m.row(b).begin());
}

}  // namespace

FieldMatrix FieldMatrix::Identity(size_t n) {
  FieldMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::FromSigned(const PrimeField& field,
                                    std::initializer_list<std::initializer_list<int64_t>> rows) {
  size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  FieldMatrix m(rows.size(), cols);
  size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw UsageError("FromSigned: ragged rows");
    size_t c = 0;
    for (int64_t v : row) m(r, c++) = field.Reduce(v);
    ++r;
  }
  return m;
}

FieldMatrix FieldMatrix::FromRows(size_t cols, const std::vector<RowVector>& rows) {
  FieldMatrix m(0, cols);
  for (const auto& row : rows) m.AppendRow(row);
  return m;
}

void FieldMatrix::AppendRow(std::span<const uint64_t> values) {
  if (values.size() != cols_) {
    throw UsageError("AppendRow: expected " + std::to_string(cols_) + " entries, got " +
                     std::to_string(values.size()));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

LeftReduction::LeftReduction(const PrimeField& field, const FieldMatrix& m)
    : field_(field), source_rows_(m.rows()), echelon_(m), combo_(FieldMatrix::Identity(m.rows())) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < m.rows() && echelon_(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    SwapRows(echelon_, pivot, rank);
    SwapRows(combo_, pivot, rank);
    uint64_t inv = field_.Inv(echelon_(rank, col));
    Scale(field_, echelon_.row(rank), inv);
    Scale(field_, combo_.row(rank), inv);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      uint64_t f = echelon_(r, col);
      if (f == 0) continue;
      SubtractScaled(field_, echelon_.row(r), echelon_.row(rank), f);
      SubtractScaled(field_, combo_.row(r), combo_.row(rank), f);
    }
    pivots_.push_back(col);
    ++rank;
  }
}

std::optional<RowVector> LeftReduction::SolveLeft(std::span<const uint64_t> target) const {
  if (target.size() != echelon_.cols()) {
    throw UsageError("SolveLeft: target length " + std::to_string(target.size()) +
                     " does not match " + std::to_string(echelon_.cols()) + " columns");
  }
  RowVector residual(target.begin(), target.end());
  RowVector u(source_rows_, 0);
  for (size_t i = 0; i < pivots_.size(); ++i) {
    uint64_t f = residual[pivots_[i]];
    if (f == 0) continue;
    SubtractScaled(field_, residual, echelon_.row(i), f);
    for (size_t j = 0; j < source_rows_; ++j) {
      u[j] = field_.Add(u[j], field_.Mul(f, combo_(i, j)));
    }
  }
  for (uint64_t x : residual) {
    if (x != 0) return std::nullopt;
  }
  return u;
}

FieldMatrix LeftReduction::NullspaceBasis() const {
  FieldMatrix basis(0, source_rows_);
  for (size_t r = pivots_.size(); r < source_rows_; ++r) basis.AppendRow(combo_.row(r));
  return basis;
}

size_t Rank(const PrimeField& field, const FieldMatrix& m) { return LeftReduction(field, m).rank(); }

std::optional<RowVector> SolveLeft(const PrimeField& field, const FieldMatrix& m,
                                   std::span<const uint64_t> target) {
  if (target.size() != m.cols()) throw UsageError("SolveLeft: dimension mismatch");
  return LeftReduction(field, m).SolveLeft(target);
}

FieldMatrix LeftNullspaceBasis(const PrimeField& field, const FieldMatrix& m) {
  return LeftReduction(field, m).NullspaceBasis();
}

RowVector MultiplyRow(const PrimeField& field, std::span<const uint64_t> u, const FieldMatrix& m) {
  if (u.size() != m.rows()) throw UsageError("MultiplyRow: dimension mismatch");
  RowVector out(m.cols(), 0);
  for (size_t r = 0; r < m.rows(); ++r) {
    if (u[r] == 0) continue;
    SubtractScaled(field, out, m.row(r), field.Neg(u[r]));
  }
  return out;
}

FieldMatrix Multiply(const PrimeField& field, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("Multiply: dimension mismatch");
  FieldMatrix out(0, b.cols());
  for (size_t r = 0; r < a.rows(); ++r) out.AppendRow(MultiplyRow(field, a.row(r), b));
  return out;
}

FieldMatrix SelectRows(const FieldMatrix& m, std::span<const size_t> rows) {
  FieldMatrix out(0, m.cols());
  for (size_t r : rows) {
    if (r >= m.rows()) throw UsageError("SelectRows: index out of range");
    out.AppendRow(m.row(r));
  }
  return out;
}

FieldMatrix SelectColumns(const FieldMatrix& m, std::span<const size_t> cols) {
  FieldMatrix out(m.rows(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= m.cols()) throw UsageError("SelectColumns: index out of range");
    for (size_t r = 0; r < m.rows(); ++r) out(r, j) = m(r, cols[j]);
  }
  return out;
}

FieldMatrix HStack(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) throw UsageError("HStack: row count mismatch");
  FieldMatrix out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + a.cols());
  }
  return out;
}

FieldMatrix SampleMatrix(const PrimeField& field, size_t rows, size_t cols, Rng& rng,
                         std::span<const CellExclusion> exclusions) {
  for (const auto& e : exclusions) {
    if (e.row >= rows || e.col >= cols) throw UsageError("SampleMatrix: exclusion cell out of range");
    if (e.residues.size() >= field.modulus()) {
      throw DomainError("SampleMatrix: exclusion set must be smaller than the field");
    }
  }
  FieldMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      auto it = std::find_if(exclusions.begin(), exclusions.end(),
                             [&](const CellExclusion& e) { return e.row == r && e.col == c; });
      m(r, c) = it == exclusions.end() ? rng.Element(field) : rng.ElementExcluding(field, it->residues);
    }
  }
  return m;
}

}  // namespace seclsc
