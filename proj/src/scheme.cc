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

#include "seclsc/scheme.h"

#include <array>
#include <utility>

#include "seclsc/errors.h"

namespace seclsc {

namespace {

constexpr std::array<std::pair<SchemeKind, const char*>, 4> kKindNames = {{
    {SchemeKind::kCyclic, "cyclic"},
    {SchemeKind::kFractionalRepetition, "frac-rep"},
    {SchemeKind::kCombined, "combined"},
    {SchemeKind::kCustom, "custom"},
}};

}  // namespace

std::string SchemeKindName(SchemeKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "custom";
}

SchemeKind SchemeKindFromName(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw ParseError("unknown scheme kind: " + name);
}

RowVector SchemeSpec::ExpandedRow(int server) const {
  return MultiplyRow(params.field, server_vectors.row(server), coeff_matrix);
}

FieldMatrix SchemeSpec::ExpandedRows() const {
  return Multiply(params.field, server_vectors, coeff_matrix);
}

RowVector SchemeSpec::Target() const {
  RowVector t(coeff_matrix.cols(), 0);
  for (int i = 0; i < num_messages(); ++i) t[i] = 1;
  return t;
}

SchemeSpec Securify(const ProblemParams& params, const Grouping& grouping, const Stage1Scheme& stage1,
                    SchemeKind kind) {
  const FieldMatrix& f = stage1.f;
  const size_t lambda = f.rows();
  if (lambda == 0 || f.cols() != static_cast<size_t>(grouping.num_groups)) {
    throw ContractViolation("securify: stage-1 matrix has the wrong shape");
  }
  for (uint64_t x : f.row(0)) {
    if (x != 1) throw ContractViolation("securify: first stage-1 row must be the all-ones sum");
  }
  if (stage1.server_vectors.rows() != static_cast<size_t>(params.n) ||
      stage1.server_vectors.cols() != lambda) {
    throw ContractViolation("securify: server vectors have the wrong shape");
  }
  FieldMatrix s(lambda, lambda - 1);
  for (size_t i = 1; i < lambda; ++i) s(i, i - 1) = 1;

  SchemeSpec spec;
  spec.kind = kind;
  spec.params = params;
  spec.grouping = grouping;
  spec.assignment = ExpandAssignment(stage1.assignment, grouping);
  spec.lambda = static_cast<int>(lambda);
  spec.randomness_count = static_cast<int>(lambda) - 1;
  spec.coeff_matrix = HStack(f, s);
  spec.server_vectors = stage1.server_vectors;
  spec.output_lengths.assign(params.n, 1);
  return spec;
}

SchemeSpec StripRandomness(const SchemeSpec& spec) {
  SchemeSpec out = spec;
  for (size_t r = 0; r < out.coeff_matrix.rows(); ++r) {
    for (size_t c = out.num_messages(); c < out.coeff_matrix.cols(); ++c) out.coeff_matrix(r, c) = 0;
  }
  return out;
}

}  // namespace seclsc
