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

#include "seclsc/builders.h"

#include <string>
#include <vector>

#include "seclsc/errors.h"

namespace seclsc {

namespace {

std::string RetryMessage(const ProblemParams& p, int attempts) {
  return "no verified scheme for (K,N,N_r)=(" + std::to_string(p.k) + "," + std::to_string(p.n) + "," +
         std::to_string(p.n_r) + ") over F_" + std::to_string(p.field.modulus()) + " after " +
         std::to_string(attempts) + " attempts; try a larger field";
}

// Group-level cyclic assignment: server n holds groups n, ..., n + M' - 1.
Assignment CyclicGroups(int n, int m_prime) {
  std::vector<std::vector<int>> sets(n);
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < m_prime; ++j) sets[s].push_back((s + j) % n);
  }
  return Assignment(n, std::move(sets));
}

// nullopt when some server's nullspace is not one-dimensional.
std::optional<Stage1Scheme> DrawCyclic(const ProblemParams& params, Rng& rng) {
  const int n = params.n;
  const int lambda = params.n_r;
  Stage1Scheme st;
  st.assignment = CyclicGroups(n, params.m_prime());
  st.f = SampleMatrix(params.field, lambda, n, rng);
  for (int c = 0; c < n; ++c) st.f(0, c) = 1;
  st.server_vectors = FieldMatrix(0, lambda);
  for (int s = 0; s < n; ++s) {
    std::vector<size_t> missing;
    for (int c = 0; c < n; ++c) {
      if (!st.assignment.Holds(s, c)) missing.push_back(c);
    }
    FieldMatrix basis = LeftNullspaceBasis(params.field, SelectColumns(st.f, missing));
    if (basis.rows() != 1) return std::nullopt;
    st.server_vectors.AppendRow(basis.row(0));
  }
  return st;
}

}  // namespace

bool AcceptScheme(const SchemeSpec& spec, const BuildOptions& options) {
  if (!CheckZeroStructure(spec).ok) return false;
  CostResult costs;
  try {
    costs = MeasureCosts(spec);
  } catch (const IntegrityError&) {
    return false;
  }
  if (costs.communication_cost != spec.params.n_r) return false;
  if (!CheckSecurity(spec).secure) return false;
  DecodeMode mode = options.decode_mode.value_or(DefaultDecodeMode(spec));
  return CheckDecodability(spec, mode, options.sample_count, spec.params.seed).decodable;
}

SchemeSpec BuildCyclicScheme(const ProblemParams& params, const BuildOptions& options) {
  params.Validate();
  Rng rng(params.seed);
  const Grouping grouping = ModGrouping(params);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto st = DrawCyclic(params, rng);
    if (!st) continue;
    SchemeSpec spec = Securify(params, grouping, *st, SchemeKind::kCyclic);
    spec.assignment.CheckRegular(params.m, params.m_prime());
    if (AcceptScheme(spec, options)) return spec;
  }
  throw ConstructionFailed(RetryMessage(params, options.max_attempts));
}

SchemeSpec BuildFractionalRepetitionScheme(const ProblemParams& params, const BuildOptions& options) {
  params.Validate();
  const int mp = params.m_prime();
  if (params.n % mp != 0) {
    throw UnsupportedParameters("fractional repetition needs M' = " + std::to_string(mp) +
                                " to divide N = " + std::to_string(params.n));
  }
  const PrimeField& field = params.field;
  const int blocks = params.n / mp;
  const int lambda = blocks;
  const int r = lambda - 1;
  const int m = params.n;

  SchemeSpec spec;
  spec.kind = SchemeKind::kFractionalRepetition;
  spec.params = params;
  spec.grouping = ContiguousGrouping(params);
  spec.assignment = FractionalRepetitionAssignment(params);
  spec.lambda = lambda;
  spec.randomness_count = r;
  // Row 0 is the sum; row i is block i's answer A_i = -Q_{i-1} + Q_i + (block sum),
  // for i < blocks. The last block's answer is row 0 minus the others.
  spec.coeff_matrix = FieldMatrix(lambda, m + r);
  for (int c = 0; c < m; ++c) spec.coeff_matrix(0, c) = 1;
  for (int i = 1; i < lambda; ++i) {
    int b = i - 1;
    for (int g = b * mp; g < (b + 1) * mp; ++g) spec.coeff_matrix(i, g) = 1;
    spec.coeff_matrix(i, m + i - 1) = 1;
    if (i >= 2) spec.coeff_matrix(i, m + i - 2) = field.Reduce(-1);
  }
  spec.server_vectors = FieldMatrix(params.n, lambda);
  for (int s = 0; s < params.n; ++s) {
    int b = s / mp;
    if (b + 1 < blocks) {
      spec.server_vectors(s, b + 1) = 1;
    } else {
      spec.server_vectors(s, 0) = 1;
      for (int i = 1; i < lambda; ++i) spec.server_vectors(s, i) = field.Reduce(-1);
    }
  }
  spec.output_lengths.assign(params.n, 1);
  if (!AcceptScheme(spec, options)) throw ConstructionFailed(RetryMessage(params, 1));
  return spec;
}

SchemeSpec BuildCombinedScheme(const ProblemParams& params, const BuildOptions& options) {
  params.Validate();
  Rng rng(params.seed);
  const Grouping grouping = ModGrouping(params);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    CombinedStage1 st = BuildCombinedStage1(params.field, params.n, params.m_prime(), rng);
    // An unlucky draw can collapse a dimension; redraw.
    if (static_cast<int>(st.scheme.f.rows()) != st.trace.value) continue;
    SchemeSpec spec = Securify(params, grouping, st.scheme, SchemeKind::kCombined);
    spec.trace = st.trace;
    spec.assignment.CheckRegular(params.m, params.m_prime());
    if (AcceptScheme(spec, options)) return spec;
  }
  throw ConstructionFailed(RetryMessage(params, options.max_attempts));
}

}  // namespace seclsc
