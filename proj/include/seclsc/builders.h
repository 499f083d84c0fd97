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

#ifndef SECLSC_BUILDERS_H_
#define SECLSC_BUILDERS_H_

#include <optional>

#include "seclsc/h_recursion.h"
#include "seclsc/rng.h"
#include "seclsc/scheme.h"
#include "seclsc/verifier.h"

namespace seclsc {

// Randomized builders draw coefficients, verify the result exactly and
// redraw on failure, up to max_attempts times (ConstructionFailed after).
struct BuildOptions {
  int max_attempts = 32;
  std::optional<DecodeMode> decode_mode;  // unset: DefaultDecodeMode
  uint64_t sample_count = kDefaultSampleCount;
};

// lambda = N_r; server n sends the left-nullspace vector of the columns of a
// random F (first row all ones) for the groups it does not hold.
SchemeSpec BuildCyclicScheme(const ProblemParams& params, const BuildOptions& options = {});

// N/M' blocks of identical servers; block answers are chained through
// Q_1..Q_{N/M'-1}. Throws UnsupportedParameters unless M' divides N.
SchemeSpec BuildFractionalRepetitionScheme(const ProblemParams& params, const BuildOptions& options = {});

// lambda = h(N, M'); the trace records the reductions applied.
SchemeSpec BuildCombinedScheme(const ProblemParams& params, const BuildOptions& options = {});

struct CombinedStage1 {
  Stage1Scheme scheme;
  HRecursionTrace trace;
};

// One randomized draw of the non-secure combined scheme over N messages,
// without verification.
CombinedStage1 BuildCombinedStage1(const PrimeField& field, int n, int m_prime, Rng& rng);

// The predicate the builders retry on: zero-structure, decodability,
// security, rank = lambda, cost = N_r.
bool AcceptScheme(const SchemeSpec& spec, const BuildOptions& options);

}  // namespace seclsc

#endif  // SECLSC_BUILDERS_H_
