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

#ifndef SECLSC_SCHEME_H_
#define SECLSC_SCHEME_H_

#include <optional>
#include <string>
#include <vector>

#include "seclsc/assignment.h"
#include "seclsc/field_matrix.h"
#include "seclsc/h_recursion.h"
#include "seclsc/problem.h"

namespace seclsc {

enum class SchemeKind { kCyclic, kFractionalRepetition, kCombined, kCustom };

std::string SchemeKindName(SchemeKind kind);
SchemeKind SchemeKindFromName(const std::string& name);

// Server n answers X_n = s_n · F' · [W'_1..W'_m | Q_1..Q_r]^T, where W'_i is
// the sum of the messages in group i.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::kCustom;
  ProblemParams params;
  Grouping grouping;
  Assignment assignment;  // dataset level
  int lambda = 0;
  int randomness_count = 0;
  FieldMatrix coeff_matrix;    // lambda x (m + r)
  FieldMatrix server_vectors;  // N x lambda
  std::vector<int> output_lengths;
  std::optional<HRecursionTrace> trace;

  int num_messages() const { return grouping.num_groups; }
  // s_n · F' over [messages | randomness].
  RowVector ExpandedRow(int server) const;
  FieldMatrix ExpandedRows() const;
  // [1..1 | 0..0]: the sum of all messages, no randomness.
  RowVector Target() const;
  // Groups each server can compute, as an N x m assignment.
  Assignment MergedAssignment() const { return MergeAssignment(assignment, grouping); }
};

// Non-secure linear scheme over N merged messages: server n sends
// server_vectors[n] · f, and f's first row is all ones.
struct Stage1Scheme {
  Assignment assignment;  // group level
  FieldMatrix f;
  FieldMatrix server_vectors;

  FieldMatrix Rows(const PrimeField& field) const { return Multiply(field, server_vectors, f); }
};

// Appends randomness columns [0; I_{lambda-1}] to f. Throws ContractViolation
// if f's first row is not all ones or the shapes disagree.
SchemeSpec Securify(const ProblemParams& params, const Grouping& grouping, const Stage1Scheme& stage1,
                    SchemeKind kind);

// Copy of `spec` whose randomness columns are all zero.
SchemeSpec StripRandomness(const SchemeSpec& spec);

}  // namespace seclsc

#endif  // SECLSC_SCHEME_H_
