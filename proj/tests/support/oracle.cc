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

#include "support/oracle.h"

#include <algorithm>
#include <functional>
#include <map>

#include "seclsc/assignment.h"

namespace seclsc::testing {

uint64_t ExtendedEuclidInverse(uint64_t a, uint64_t q) {
  int64_t old_r = static_cast<int64_t>(a % q), r = static_cast<int64_t>(q);
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    int64_t quotient = old_r / r;
    int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  int64_t inv = old_s % static_cast<int64_t>(q);
  return static_cast<uint64_t>(inv < 0 ? inv + static_cast<int64_t>(q) : inv);
}

size_t ColumnPivotRank(const PrimeField& field, const FieldMatrix& m) {
  // Work on the transpose: rows of t are columns of m.
  std::vector<std::vector<uint64_t>> t(m.cols(), std::vector<uint64_t>(m.rows()));
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) t[c][r] = m(r, c);
  }
  size_t rank = 0;
  for (size_t col = 0; col < m.rows() && rank < t.size(); ++col) {
    size_t pivot = rank;
    while (pivot < t.size() && t[pivot][col] == 0) ++pivot;
    if (pivot == t.size()) continue;
    std::swap(t[pivot], t[rank]);
    uint64_t inv = ExtendedEuclidInverse(t[rank][col], field.modulus());
    for (size_t r = rank + 1; r < t.size(); ++r) {
      uint64_t f = field.Mul(t[r][col], inv);
      for (size_t c = 0; c < m.rows(); ++c) t[r][c] = field.Sub(t[r][c], field.Mul(f, t[rank][c]));
    }
    ++rank;
  }
  return rank;
}

BruteForceVerdict BruteForce(const SchemeSpec& spec) {
  const PrimeField& field = spec.params.field;
  const uint64_t q = field.modulus();
  const int n = spec.params.n;
  const int m = spec.num_messages();
  const size_t width = spec.coeff_matrix.cols();

  std::vector<std::vector<uint64_t>> rows(n, std::vector<uint64_t>(width, 0));
  for (int s = 0; s < n; ++s) {
    for (size_t c = 0; c < width; ++c) {
      uint64_t acc = 0;
      for (size_t j = 0; j < spec.coeff_matrix.rows(); ++j) {
        acc = (acc + spec.server_vectors(s, j) * spec.coeff_matrix(j, c)) % q;
      }
      rows[s][c] = acc;
    }
  }

  auto subsets = AllSubsets(n, spec.params.n_r);
  // Per W: histogram of the full answer vector over all Q.
  std::map<std::vector<uint64_t>, std::map<std::vector<uint64_t>, int>> histograms;
  std::vector<std::map<std::vector<uint64_t>, uint64_t>> decoded(subsets.size());
  std::vector<bool> subset_fails(subsets.size(), false);

  std::vector<uint64_t> z(width, 0);
  while (true) {
    std::vector<uint64_t> x(n);
    for (int s = 0; s < n; ++s) {
      uint64_t acc = 0;
      for (size_t c = 0; c < width; ++c) acc = (acc + rows[s][c] * z[c]) % q;
      x[s] = acc;
    }
    std::vector<uint64_t> w(z.begin(), z.begin() + m);
    uint64_t sum = 0;
    for (uint64_t v : w) sum = (sum + v) % q;
    ++histograms[w][x];
    for (size_t i = 0; i < subsets.size(); ++i) {
      std::vector<uint64_t> key;
      for (int s : subsets[i]) key.push_back(x[s]);
      auto [it, inserted] = decoded[i].emplace(key, sum);
      if (!inserted && it->second != sum) subset_fails[i] = true;
    }
    size_t c = 0;
    while (c < width && ++z[c] == q) z[c++] = 0;
    if (c == width) break;
  }

  BruteForceVerdict verdict;
  std::map<uint64_t, const std::map<std::vector<uint64_t>, int>*> reference;
  for (const auto& [w, hist] : histograms) {
    uint64_t sum = 0;
    for (uint64_t v : w) sum = (sum + v) % q;
    auto [it, inserted] = reference.emplace(sum, &hist);
    if (!inserted && *it->second != hist) verdict.secure = false;
  }
  for (size_t i = 0; i < subsets.size(); ++i) {
    if (subset_fails[i]) verdict.failing_subsets.insert(subsets[i]);
  }
  return verdict;
}

SchemeSpec RandomLinearScheme(const ProblemParams& params, int lambda, int randomness, Rng& rng) {
  SchemeSpec spec;
  spec.kind = SchemeKind::kCustom;
  spec.params = params;
  spec.grouping = ModGrouping(params);
  std::vector<std::vector<int>> all(params.n);
  for (auto& z : all) {
    for (int k = 0; k < params.k; ++k) z.push_back(k);
  }
  spec.assignment = Assignment(params.k, std::move(all));
  spec.lambda = lambda;
  spec.randomness_count = randomness;
  spec.coeff_matrix = SampleMatrix(params.field, lambda, params.n + randomness, rng);
  spec.server_vectors = SampleMatrix(params.field, params.n, lambda, rng);
  spec.output_lengths.assign(params.n, 1);
  return spec;
}

std::vector<std::vector<int>> AllSubsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

uint64_t CountAssignmentsByBacktracking(int n, int m_prime) {
  std::vector<uint32_t> rows;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) == m_prime) rows.push_back(mask);
  }
  std::set<std::vector<uint32_t>> canonical;
  std::vector<uint32_t> chosen;
  std::vector<int> count(n, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(chosen.size()) == n) {
      if (std::all_of(count.begin(), count.end(), [&](int c) { return c == m_prime; })) {
        auto sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        canonical.insert(sorted);
      }
      return;
    }
    for (uint32_t r : rows) {
      bool ok = true;
      for (int k = 0; k < n; ++k) ok = ok && !((r >> k & 1) && count[k] == m_prime);
      if (!ok) continue;
      for (int k = 0; k < n; ++k) count[k] += r >> k & 1;
      chosen.push_back(r);
      rec();
      chosen.pop_back();
      for (int k = 0; k < n; ++k) count[k] -= r >> k & 1;
    }
  };
  rec();
  return canonical.size();
}

}  // namespace seclsc::testing
