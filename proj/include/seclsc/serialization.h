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

#ifndef SECLSC_SERIALIZATION_H_
#define SECLSC_SERIALIZATION_H_

#include "json.hpp"

#include "seclsc/assignment.h"
#include "seclsc/h_recursion.h"
#include "seclsc/scheme.h"
#include "seclsc/verifier.h"

namespace seclsc {

// Indices are 1-based in JSON and 0-based in memory. Readers throw ParseError.

nlohmann::json ToJson(const Assignment& a);
Assignment AssignmentFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const HRecursionTrace& trace);
HRecursionTrace TraceFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const ProblemParams& params);

nlohmann::json ToJson(const SchemeSpec& spec);
// Also checks shapes, residue ranges and parameter validity.
SchemeSpec SchemeSpecFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const VerificationReport& report);

}  // namespace seclsc

#endif  // SECLSC_SERIALIZATION_H_
