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

#include "seclsc/verifier.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "seclsc/errors.h"
#include "seclsc/rng.h"

namespace seclsc {

namespace {

// Incrementally built echelon basis of a subspace of F_q^width.
class SpanBasis {
 public:
  SpanBasis(const PrimeField* field, size_t width) : field_(field), width_(width) {}

  size_t rank() const { return pivots_.size(); }

  // Reduces v in place against the basis; returns the first nonzero column
  // of the remainder, or width_ if v lies in the span.
  size_t Reduce(RowVector& v) const {
    for (size_t i = 0; i < pivots_.size(); ++i) {
      uint64_t f = v[pivots_[i]];
      if (f == 0) continue;
      uint64_t neg = field_->Neg(f);
      const uint64_t* b = &rows_[i * width_];
      for (size_t c = 0; c < width_; ++c) {
        if (b[c] != 0) v[c] = (v[c] + neg * b[c]) % field_->modulus();
      }
    }
    for (size_t c = 0; c < width_; ++c) {
      if (v[c] != 0) return c;
    }
    return width_;
  }

  void Insert(std::span<const uint64_t> row) {
    RowVector v(row.begin(), row.end());
    size_t p = Reduce(v);
    if (p == width_) return;
    uint64_t inv = field_->Inv(v[p]);
    for (auto& x : v) x = field_->Mul(x, inv);
    pivots_.push_back(p);
    rows_.insert(rows_.end(), v.begin(), v.end());
  }

  bool Contains(std::span<const uint64_t> target) const {
    RowVector v(target.begin(), target.end());
    return Reduce(v) == width_;
  }

 private:
  const PrimeField* field_;
  size_t width_;
  std::vector<size_t> pivots_;
  std::vector<uint64_t> rows_;
};

// Answers expressed in coordinates of a basis of their joint row space. The
// target is decodable from a subset exactly when its coordinates lie in the
// span of the subset's coordinates, and the coordinate space has dimension
// rank(T) <= N, which keeps per-subset work small.
struct Projection {
  bool target_reachable = false;
  size_t width = 0;
  FieldMatrix coords;  // N x rank
  RowVector target;    // rank
};

Projection Project(const SchemeSpec& spec) {
  const PrimeField& field = spec.params.field;
  FieldMatrix t = spec.ExpandedRows();
  LeftReduction red(field, t);
  Projection p;
  p.width = red.rank();
  const auto& pivots = red.pivot_columns();
  p.coords = FieldMatrix(t.rows(), p.width);
  for (size_t r = 0; r < t.rows(); ++r) {
    for (size_t i = 0; i < p.width; ++i) p.coords(r, i) = t(r, pivots[i]);
  }
  RowVector target = spec.Target();
  p.target_reachable = red.SolveLeft(target).has_value();
  for (size_t i = 0; i < p.width; ++i) p.target.push_back(target[pivots[i]]);
  return p;
}

class ExhaustiveDecoder {
 public:
  ExhaustiveDecoder(const PrimeField& field, const Projection& p, int n, int n_r, DecodabilityResult* out)
      : field_(field), p_(p), n_(n), n_r_(n_r), out_(out) {}

  void Run() {
    SpanBasis empty(&field_, p_.width);
    Dfs(0, empty);
  }

 private:
  void Fail() {
    ++out_->failure_count;
    if (out_->failing_subsets.size() < kMaxReportedFailures) out_->failing_subsets.push_back(chosen_);
  }

  void Dfs(int start, const SpanBasis& basis) {
    const int depth = static_cast<int>(chosen_.size());
    if (depth == n_r_) {
      ++out_->subsets_checked;
      if (!p_.target_reachable || !basis.Contains(p_.target)) Fail();
      return;
    }
    // A full-rank prefix decodes with every completion.
    if (basis.rank() == p_.width && p_.target_reachable) {
      out_->subsets_checked += Binomial(n_ - start, n_r_ - depth);
      return;
    }
    for (int i = start; i <= n_ - (n_r_ - depth); ++i) {
      SpanBasis next = basis;
      next.Insert(p_.coords.row(i));
      chosen_.push_back(i);
      Dfs(i + 1, next);
      chosen_.pop_back();
    }
  }

  const PrimeField& field_;
  const Projection& p_;
  int n_;
  int n_r_;
  DecodabilityResult* out_;
  std::vector<int> chosen_;
};

bool SubsetDecodes(const PrimeField& field, const Projection& p, const std::vector<int>& subset) {
  if (!p.target_reachable) return false;
  SpanBasis basis(&field, p.width);
  for (int s : subset) basis.Insert(p.coords.row(s));
  return basis.Contains(p.target);
}

std::vector<int> RandomSubset(Rng& rng, int n, int size) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < size; ++i) {
    int j = i + static_cast<int>(rng.Below(n - i));
    std::swap(perm[i], perm[j]);
  }
  perm.resize(size);
  std::sort(perm.begin(), perm.end());
  return perm;
}

bool IsMultipleOfOnes(std::span<const uint64_t> v) {
  return !v.empty() && v[0] != 0 && std::all_of(v.begin(), v.end(), [&](uint64_t x) { return x == v[0]; });
}

CostResult ComputeCosts(const SchemeSpec& spec) {
  CostResult c;
  std::vector<int> lengths = spec.output_lengths;
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  int take = std::min<int>(spec.params.n_r, static_cast<int>(lengths.size()));
  c.communication_cost = std::accumulate(lengths.begin(), lengths.begin() + take, 0);
  c.randomness_size = spec.randomness_count;
  c.lambda_measured = static_cast<int>(Rank(spec.params.field, spec.ExpandedRows()));
  return c;
}

}  // namespace

std::string DecodeModeName(DecodeMode mode) {
  return mode == DecodeMode::kExhaustive ? "exhaustive" : "sampled";
}

uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

ZeroStructureResult CheckZeroStructure(const SchemeSpec& spec) {
  ZeroStructureResult result;
  Assignment merged = spec.MergedAssignment();
  for (int n = 0; n < spec.params.n; ++n) {
    RowVector row = spec.ExpandedRow(n);
    for (int i = 0; i < spec.num_messages(); ++i) {
      if (row[i] != 0 && !merged.Holds(n, i)) result.violations.emplace_back(n, i);
    }
  }
  result.ok = result.violations.empty();
  return result;
}

DecodeMode DefaultDecodeMode(const SchemeSpec& spec) {
  return Binomial(spec.params.n, spec.params.n_r) <= kMaxExhaustiveSubsets ? DecodeMode::kExhaustive
                                                                           : DecodeMode::kSampled;
}

DecodabilityResult CheckDecodability(const SchemeSpec& spec, DecodeMode mode, uint64_t sample_count,
                                     uint64_t seed) {
  const int n = spec.params.n;
  const int n_r = spec.params.n_r;
  const uint64_t total = Binomial(n, n_r);
  DecodabilityResult result;
  result.mode = mode;
  Projection p = Project(spec);
  const PrimeField& field = spec.params.field;

  if (mode == DecodeMode::kExhaustive) {
    if (total > kMaxExhaustiveSubsets) {
      throw LimitExceeded("C(" + std::to_string(n) + ", " + std::to_string(n_r) +
                          ") subsets exceed the exhaustive bound; use sampled mode");
    }
    ExhaustiveDecoder(field, p, n, n_r, &result).Run();
  } else {
    if (n > 64) throw LimitExceeded("sampled decodability supports at most 64 servers");
    const uint64_t count = std::min(sample_count, total);
    std::set<std::vector<int>> subsets;  // lexicographic order
    Rng rng(seed);
    while (subsets.size() < count) subsets.insert(RandomSubset(rng, n, n_r));
    for (const auto& subset : subsets) {
      ++result.subsets_checked;
      if (SubsetDecodes(field, p, subset)) continue;
      ++result.failure_count;
      if (result.failing_subsets.size() < kMaxReportedFailures) result.failing_subsets.push_back(subset);
    }
  }
  result.decodable = result.failure_count == 0;
  return result;
}

SecurityResult CheckSecurity(const SchemeSpec& spec) {
  const PrimeField& field = spec.params.field;
  const size_t m = spec.num_messages();
  FieldMatrix t = spec.ExpandedRows();
  LeftReduction red(field, t);

  SecurityResult result;
  result.rho = static_cast<int>(red.rank());
  FieldMatrix basis(0, t.cols());
  for (size_t i = 0; i < red.rank(); ++i) basis.AppendRow(red.echelon().row(i));
  std::vector<size_t> q_cols;
  for (size_t c = m; c < t.cols(); ++c) q_cols.push_back(c);
  FieldMatrix q_block = SelectColumns(basis, q_cols);
  LeftReduction q_red(field, q_block);
  result.q_block_rank = static_cast<int>(q_red.rank());
  FieldMatrix kernel = q_red.NullspaceBasis();
  result.kernel_dim = static_cast<int>(kernel.rows());

  // Every combination of the answers that cancels the randomness must be a
  // multiple of the sum; anything else is learned by the user.
  result.secure = true;
  for (size_t i = 0; i < kernel.rows(); ++i) {
    RowVector v = MultiplyRow(field, kernel.row(i), basis);
    std::span<const uint64_t> message_part(v.data(), m);
    if (IsMultipleOfOnes(message_part)) {
      result.sum_revealed = true;
    } else if (result.secure) {
      result.secure = false;
      result.leaked_direction.assign(message_part.begin(), message_part.end());
    }
  }
  return result;
}

CostResult MeasureCosts(const SchemeSpec& spec) {
  CostResult c = ComputeCosts(spec);
  if (c.lambda_measured != spec.lambda) {
    throw IntegrityError("answers have rank " + std::to_string(c.lambda_measured) +
                         " but the scheme declares lambda = " + std::to_string(spec.lambda));
  }
  return c;
}

ChainConsistency CheckChainConsistency(const SchemeSpec& spec) {
  ChainConsistency r;
  Assignment merged = spec.MergedAssignment();
  r.exact = merged.num_servers() <= kMaxExactChainServers;
  r.certificate = FindLongestChain(merged, r.exact ? ChainMode::kExact : ChainMode::kGreedy);
  r.chain_length = r.certificate.length();
  const int mp = spec.params.m_prime();
  r.h_value = HValue(spec.params.n, mp).value;
  r.optimality_applies = CombinedSchemeOptimal(spec.params.n, mp);
  r.consistent = r.chain_length - 1 <= spec.randomness_count;
  if (r.exact && r.optimality_applies) {
    r.consistent = r.consistent && r.chain_length >= r.h_value;
    if (spec.kind == SchemeKind::kCombined) r.consistent = r.consistent && r.chain_length == r.h_value;
  }
  return r;
}

bool VerificationReport::passed() const {
  return zero_structure.ok && decodability.decodable && security.secure &&
         costs.communication_cost == params.n_r && lambda_consistent;
}

VerificationReport Verify(const SchemeSpec& spec, const VerifyOptions& options) {
  VerificationReport report;
  report.scheme = SchemeKindName(spec.kind);
  report.params = spec.params;
  report.zero_structure = CheckZeroStructure(spec);
  report.decodability = CheckDecodability(spec, options.mode.value_or(DefaultDecodeMode(spec)),
                                          options.sample_count, options.sample_seed);
  report.security = CheckSecurity(spec);
  report.costs = ComputeCosts(spec);
  report.lambda_consistent = report.costs.lambda_measured == spec.lambda;
  if (options.check_chain) report.chain = CheckChainConsistency(spec);
  return report;
}

}  // namespace seclsc
