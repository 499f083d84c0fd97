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

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "seclsc/builders.h"
#include "seclsc/errors.h"

namespace seclsc {

namespace {

// Stage-1 data over n messages before it is wrapped in an Assignment.
struct Partial {
  std::vector<std::vector<int>> sets;
  FieldMatrix f;  // lambda x n, first row all ones
  FieldMatrix s;  // servers x lambda
};

RowVector Ones(size_t n) { return RowVector(n, 1); }

// Picks f = [1..1; the answers that add a new dimension, in server order]
// and re-expresses every answer in that basis.
Partial FromAnswers(const PrimeField& field, std::vector<std::vector<int>> sets, const FieldMatrix& x) {
  Partial p;
  p.sets = std::move(sets);
  p.f = FieldMatrix(0, x.cols());
  p.f.AppendRow(Ones(x.cols()));
  size_t rank = 1;
  for (size_t r = 0; r < x.rows(); ++r) {
    FieldMatrix trial = p.f;
    trial.AppendRow(x.row(r));
    size_t trial_rank = Rank(field, trial);
    if (trial_rank > rank) {
      p.f = std::move(trial);
      rank = trial_rank;
    }
  }
  LeftReduction red(field, p.f);
  p.s = FieldMatrix(0, p.f.rows());
  for (size_t r = 0; r < x.rows(); ++r) {
    auto u = red.SolveLeft(x.row(r));
    if (!u) throw IntegrityError("answer outside the span of its own basis");
    p.s.AppendRow(*u);
  }
  return p;
}

RowVector RandomCombination(const PrimeField& field, const FieldMatrix& basis, Rng& rng) {
  RowVector coeffs(basis.rows());
  for (auto& c : coeffs) c = rng.Element(field);
  return MultiplyRow(field, coeffs, basis);
}

class Stage1Builder {
 public:
  Stage1Builder(const PrimeField& field, const HRecursionTrace& trace, Rng& rng)
      : field_(field), trace_(trace), rng_(rng) {}

  Partial Build(size_t step_index) {
    const HStep& step = trace_.steps.at(step_index);
    switch (step.rule) {
      case HRule::kBaseRep:
        return BaseRep(step.n);
      case HRule::kGcd:
        return Gcd(step, Build(step_index + 1));
      case HRule::kBlocks:
        return Blocks(step, Build(step_index + 1));
      case HRule::kEven:
        return Even(step, Build(step_index + 1));
      case HRule::kOddBase:
        return OddBase(step.n, step.m);
      case HRule::kReflect:
        return Reflect(step, Build(step_index + 1));
    }
    throw IntegrityError("unknown recursion rule");
  }

 private:
  // Every server sends its own message.
  Partial BaseRep(int n) {
    std::vector<std::vector<int>> sets(n);
    for (int i = 0; i < n; ++i) sets[i] = {i};
    return FromAnswers(field_, std::move(sets), FieldMatrix::Identity(n));
  }

  // Super-message j is the sum of messages [jg, (j+1)g); server n plays the
  // inner server n / g.
  Partial Gcd(const HStep& step, const Partial& inner) {
    const int g = step.n / step.n_after;
    Partial p;
    p.sets.resize(step.n);
    for (int srv = 0; srv < step.n; ++srv) {
      for (int j : inner.sets[srv / g]) {
        for (int k = j * g; k < (j + 1) * g; ++k) p.sets[srv].push_back(k);
      }
    }
    p.f = FieldMatrix(inner.f.rows(), step.n);
    for (size_t r = 0; r < inner.f.rows(); ++r) {
      for (int c = 0; c < step.n; ++c) p.f(r, c) = inner.f(r, c / g);
    }
    p.s = FieldMatrix(0, inner.s.cols());
    for (int srv = 0; srv < step.n; ++srv) p.s.AppendRow(inner.s.row(srv / g));
    return p;
  }

  // b blocks of m servers send their block sums; the rest run the inner scheme.
  Partial Blocks(const HStep& step, const Partial& inner) {
    const int m = step.m;
    const int b = (step.n - step.n_after) / m;
    const int offset = b * m;
    std::vector<std::vector<int>> sets(step.n);
    FieldMatrix x(step.n, step.n);
    for (int srv = 0; srv < offset; ++srv) {
      int block = srv / m;
      for (int k = block * m; k < (block + 1) * m; ++k) {
        sets[srv].push_back(k);
        x(srv, k) = 1;
      }
    }
    FieldMatrix inner_x = Multiply(field_, inner.s, inner.f);
    for (int j = 0; j < step.n_after; ++j) {
      for (int k : inner.sets[j]) sets[offset + j].push_back(offset + k);
      for (int k = 0; k < step.n_after; ++k) x(offset + j, offset + k) = inner_x(j, k);
    }
    return FromAnswers(field_, std::move(sets), x);
  }

  // N = 2M - y with M even: two halves of [M] send A_1 = 2F_1 - F_2 and
  // A_2 = F_2 - F_1; the rest run the inner scheme on the pairs
  // P_i = W_{y+i} + 2 W_{M+i}, whose sum is F_2.
  Partial Even(const HStep& step, const Partial& inner) {
    const int n = step.n;
    const int m = step.m;
    const int y = 2 * m - n;
    const int half = m / 2;
    std::vector<std::vector<int>> sets(n);
    FieldMatrix x(n, n);
    const uint64_t two = field_.Reduce(2);
    const uint64_t minus_one = field_.Reduce(-1);
    for (int srv = 0; srv < half; ++srv) {
      for (int k = 0; k < m; ++k) {
        sets[srv].push_back(k);
        x(srv, k) = k < y ? two : 1;
      }
    }
    for (int srv = half; srv < m; ++srv) {
      for (int k = 0; k < y; ++k) {
        sets[srv].push_back(k);
        x(srv, k) = minus_one;
      }
      for (int k = m; k < n; ++k) {
        sets[srv].push_back(k);
        x(srv, k) = 1;
      }
    }
    FieldMatrix inner_x = Multiply(field_, inner.s, inner.f);
    for (int j = 0; j < n - m; ++j) {
      for (int i : inner.sets[j]) {
        sets[m + j].push_back(y + i);
        sets[m + j].push_back(m + i);
      }
      for (int i = 0; i < n - m; ++i) {
        x(m + j, y + i) = inner_x(j, i);
        x(m + j, m + i) = field_.Mul(two, inner_x(j, i));
      }
    }
    return FromAnswers(field_, std::move(sets), x);
  }

  // N = 2M - y with M odd, t = (M-1)/2. Messages split into [0,t), [t,M) and
  // [M,N); f_1 = (0 | a | 1) and further rows are random on [M,N) only.
  Partial OddBase(int n, int m) {
    const int y = 2 * m - n;
    const int t = (m - 1) / 2;
    const int p3 = n - m;
    const int lambda = t + 3 - y;

    std::vector<std::vector<int>> sets(n);
    auto window = [&](int srv, int start, int len) {
      for (int w = 0; w < len; ++w) sets[srv].push_back(m + (start + w) % p3);
    };
    for (int srv = 0; srv < y; ++srv) {
      for (int k = 0; k < m; ++k) sets[srv].push_back(k);
    }
    for (int j = 0; j < m - y; ++j) {
      for (int k = 0; k < t; ++k) sets[y + j].push_back(k);
      window(y + j, j, m - t);
    }
    for (int j = 0; j < p3; ++j) {
      for (int k = t; k < m; ++k) sets[m + j].push_back(k);
      window(m + j, j, t);
    }

    const uint64_t exclude[] = {0, 1};
    const uint64_t a = rng_.ElementExcluding(field_, exclude);
    Partial p;
    p.f = FieldMatrix(lambda, n);
    for (int c = 0; c < n; ++c) {
      p.f(0, c) = 1;
      p.f(1, c) = c < t ? 0 : (c < m ? a : 1);
    }
    for (int r = 2; r < lambda; ++r) {
      for (int c = m; c < n; ++c) p.f(r, c) = rng_.Element(field_);
    }

    // g = [a f_0 - f_1; f_2; ...], h = [f_1; f_2; ...]
    FieldMatrix g(lambda - 1, n);
    FieldMatrix h(lambda - 1, n);
    for (int c = 0; c < n; ++c) {
      g(0, c) = field_.Sub(field_.Mul(a, p.f(0, c)), p.f(1, c));
      h(0, c) = p.f(1, c);
      for (int r = 2; r < lambda; ++r) g(r - 1, c) = h(r - 1, c) = p.f(r, c);
    }

    auto missing_part3 = [&](int srv) {
      std::vector<size_t> cols;
      for (int k = m; k < n; ++k) {
        if (std::find(sets[srv].begin(), sets[srv].end(), k) == sets[srv].end()) cols.push_back(k);
      }
      return cols;
    };

    p.s = FieldMatrix(n, lambda);
    for (int srv = 0; srv < y; ++srv) {
      p.s(srv, 0) = 1;
      p.s(srv, 1) = field_.Reduce(-1);
    }
    for (int srv = y; srv < n; ++srv) {
      const bool second_class = srv < m;
      const FieldMatrix& rows = second_class ? g : h;
      auto cols = missing_part3(srv);
      FieldMatrix basis = LeftNullspaceBasis(field_, SelectColumns(rows, cols));
      RowVector v = basis.rows() == 1 && !second_class ? basis.RowCopy(0)
                                                       : RandomCombination(field_, basis, rng_);
      // Back to coordinates over f.
      if (second_class) {
        p.s(srv, 0) = field_.Mul(a, v[0]);
        p.s(srv, 1) = field_.Neg(v[0]);
      } else {
        p.s(srv, 1) = v[0];
      }
      for (int r = 2; r < lambda; ++r) p.s(srv, r) = v[r - 1];
    }
    p.sets = std::move(sets);
    for (auto& z : p.sets) std::sort(z.begin(), z.end());
    return p;
  }

  // M < N < 1.5M, d = N - M: messages [0,d) go to servers [0,M), messages
  // [d,N) to servers [M,N), and the inner (M, 2M-N) pattern places [d,N) on
  // servers [0,M). f = [f5 | f4] with f5 constant per row.
  Partial Reflect(const HStep& step, const Partial& inner) {
    const int n = step.n;
    const int m = step.m;
    const int d = n - m;
    const size_t lambda = inner.f.rows();

    Partial p;
    p.sets.resize(n);
    for (int srv = 0; srv < m; ++srv) {
      for (int k = 0; k < d; ++k) p.sets[srv].push_back(k);
      for (int k : inner.sets[srv]) p.sets[srv].push_back(d + k);
    }
    for (int srv = m; srv < n; ++srv) {
      for (int k = d; k < n; ++k) p.sets[srv].push_back(k);
    }

    FieldMatrix f5(lambda, d);
    for (size_t r = 0; r < lambda; ++r) {
      uint64_t v = r == 0 ? 1 : rng_.Element(field_);
      for (int c = 0; c < d; ++c) f5(r, c) = v;
    }
    p.f = HStack(f5, inner.f);

    FieldMatrix basis = LeftNullspaceBasis(field_, f5);
    p.s = FieldMatrix(0, lambda);
    for (int srv = 0; srv < m; ++srv) p.s.AppendRow(inner.s.row(srv));
    for (int srv = m; srv < n; ++srv) p.s.AppendRow(RandomCombination(field_, basis, rng_));
    return p;
  }

  const PrimeField& field_;
  const HRecursionTrace& trace_;
  Rng& rng_;
};

}  // namespace

CombinedStage1 BuildCombinedStage1(const PrimeField& field, int n, int m_prime, Rng& rng) {
  CombinedStage1 out;
  out.trace = HValue(n, m_prime);
  Partial p = Stage1Builder(field, out.trace, rng).Build(0);
  out.scheme.assignment = Assignment(n, std::move(p.sets));
  out.scheme.f = std::move(p.f);
  out.scheme.server_vectors = std::move(p.s);
  return out;
}

}  // namespace seclsc
