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

#include "seclsc/serialization.h"

#include <string>
#include <vector>

#include "seclsc/errors.h"

namespace seclsc {

using nlohmann::json;

namespace {

template <typename T>
T Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

json MatrixToJson(const FieldMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}};
}

FieldMatrix MatrixFromJson(const json& j, const PrimeField& field) {
  auto rows = Field<size_t>(j, "rows");
  auto cols = Field<size_t>(j, "cols");
  auto entries = Field<std::vector<uint64_t>>(j, "entries");
  if (entries.size() != rows * cols) throw ParseError("matrix entry count does not match its shape");
  FieldMatrix m(rows, cols);
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] >= field.modulus()) throw ParseError("matrix entry not reduced modulo q");
    m(i / cols, i % cols) = entries[i];
  }
  return m;
}

json SubsetsToJson(const std::vector<std::vector<int>>& subsets) {
  json out = json::array();
  for (const auto& s : subsets) {
    json one = json::array();
    for (int i : s) one.push_back(i + 1);
    out.push_back(one);
  }
  return out;
}

}  // namespace

json ToJson(const Assignment& a) {
  json sets = json::array();
  for (const auto& z : a.sets()) {
    json one = json::array();
    for (int k : z) one.push_back(k + 1);
    sets.push_back(one);
  }
  return {{"n", a.num_servers()}, {"k", a.num_datasets()}, {"sets", sets}};
}

Assignment AssignmentFromJson(const json& j) {
  int n = Field<int>(j, "n");
  int k = Field<int>(j, "k");
  auto sets = Field<std::vector<std::vector<int>>>(j, "sets");
  if (static_cast<int>(sets.size()) != n) throw ParseError("assignment lists the wrong number of servers");
  for (auto& z : sets) {
    for (int& d : z) {
      if (d < 1 || d > k) throw ParseError("assignment dataset index out of range");
      --d;
    }
  }
  return Assignment(k, std::move(sets));
}

json ToJson(const HRecursionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"rule", RuleName(s.rule)}, {"from", {s.n, s.m}}, {"to", {s.n_after, s.m_after}}});
  }
  return {{"steps", steps}, {"value", trace.value}};
}

HRecursionTrace TraceFromJson(const json& j) {
  HRecursionTrace t;
  t.value = Field<int>(j, "value");
  for (const auto& s : Field<json>(j, "steps")) {
    auto from = Field<std::vector<int>>(s, "from");
    auto to = Field<std::vector<int>>(s, "to");
    if (from.size() != 2 || to.size() != 2) throw ParseError("trace step needs [N, M'] pairs");
    t.steps.push_back({RuleFromName(Field<std::string>(s, "rule")), from[0], from[1], to[0], to[1]});
  }
  return t;
}

json ToJson(const ProblemParams& p) {
  return {{"K", p.k}, {"N", p.n}, {"N_r", p.n_r}, {"M", p.m}, {"q", p.field.modulus()}, {"seed", p.seed}};
}

json ToJson(const SchemeSpec& spec) {
  json grouping = json::array();
  for (int g : spec.grouping.group_of) grouping.push_back(g + 1);
  json vectors = json::array();
  for (size_t r = 0; r < spec.server_vectors.rows(); ++r) vectors.push_back(spec.server_vectors.RowCopy(r));
  json j = {
      {"scheme", SchemeKindName(spec.kind)},
      {"params", ToJson(spec.params)},
      {"grouping", grouping},
      {"assignment", ToJson(spec.assignment)},
      {"lambda", spec.lambda},
      {"randomness_count", spec.randomness_count},
      {"coeff_matrix", MatrixToJson(spec.coeff_matrix)},
      {"server_vectors", vectors},
      {"output_lengths", spec.output_lengths},
  };
  j["trace"] = spec.trace ? ToJson(*spec.trace) : json(nullptr);
  return j;
}

SchemeSpec SchemeSpecFromJson(const json& j) {
  SchemeSpec spec;
  spec.kind = j.contains("scheme") ? SchemeKindFromName(Field<std::string>(j, "scheme")) : SchemeKind::kCustom;
  const json& p = Field<json>(j, "params");
  try {
    spec.params = ProblemParams::Make(Field<int>(p, "K"), Field<int>(p, "N"), Field<int>(p, "N_r"),
                                      Field<uint64_t>(p, "q"), Field<uint64_t>(p, "seed"));
    if (p.contains("M")) {
      spec.params.m = Field<int>(p, "M");
      spec.params.Validate();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    throw ParseError(std::string("params: ") + e.what());
  }
  const int n = spec.params.n;

  auto groups = Field<std::vector<int>>(j, "grouping");
  if (static_cast<int>(groups.size()) != spec.params.k) throw ParseError("grouping must list every dataset");
  spec.grouping.num_groups = n;
  for (int g : groups) {
    if (g < 1 || g > n) throw ParseError("group index out of range");
    spec.grouping.group_of.push_back(g - 1);
  }

  spec.assignment = AssignmentFromJson(Field<json>(j, "assignment"));
  if (spec.assignment.num_servers() != n || spec.assignment.num_datasets() != spec.params.k) {
    throw ParseError("assignment shape does not match params");
  }

  spec.lambda = Field<int>(j, "lambda");
  spec.randomness_count = Field<int>(j, "randomness_count");
  spec.coeff_matrix = MatrixFromJson(Field<json>(j, "coeff_matrix"), spec.params.field);
  if (static_cast<int>(spec.coeff_matrix.rows()) != spec.lambda ||
      static_cast<int>(spec.coeff_matrix.cols()) != n + spec.randomness_count) {
    throw ParseError("coeff_matrix must be lambda x (N + randomness_count)");
  }

  auto vectors = Field<std::vector<RowVector>>(j, "server_vectors");
  if (static_cast<int>(vectors.size()) != n) throw ParseError("server_vectors must have one row per server");
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != spec.lambda) throw ParseError("server vector length must equal lambda");
    for (uint64_t x : v) {
      if (x >= spec.params.field.modulus()) throw ParseError("server vector entry not reduced modulo q");
    }
  }
  spec.server_vectors = FieldMatrix::FromRows(spec.lambda, vectors);

  spec.output_lengths = Field<std::vector<int>>(j, "output_lengths");
  if (static_cast<int>(spec.output_lengths.size()) != n) throw ParseError("output_lengths must have N entries");

  if (j.contains("trace") && !j.at("trace").is_null()) spec.trace = TraceFromJson(j.at("trace"));
  return spec;
}

json ToJson(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& [server, message] : r.zero_structure.violations) {
    violations.push_back({{"server", server + 1}, {"message", message + 1}});
  }
  json security = {
      {"secure", r.security.secure},
      {"rank", r.security.rho},
      {"q_block_rank", r.security.q_block_rank},
      {"randomness_free_dim", r.security.kernel_dim},
      {"sum_revealed", r.security.sum_revealed},
  };
  security["leaked_direction"] =
      r.security.leaked_direction.empty() ? json(nullptr) : json(r.security.leaked_direction);
  json j = {
      {"field", r.params.field.modulus()},
      {"seed", r.params.seed},
      {"scheme", r.scheme},
      {"params", ToJson(r.params)},
      {"passed", r.passed()},
      {"zero_structure", {{"ok", r.zero_structure.ok}, {"violations", violations}}},
      {"decodability",
       {{"decodable", r.decodability.decodable},
        {"mode", DecodeModeName(r.decodability.mode)},
        {"subsets_checked", r.decodability.subsets_checked},
        {"failure_count", r.decodability.failure_count},
        {"failing_subsets", SubsetsToJson(r.decodability.failing_subsets)}}},
      {"security", security},
      {"communication_cost", r.costs.communication_cost},
      {"randomness_size", r.costs.randomness_size},
      {"lambda_measured", r.costs.lambda_measured},
      {"lambda_consistent", r.lambda_consistent},
  };
  if (r.chain) {
    json chain_servers = json::array();
    for (int s : r.chain->certificate.servers) chain_servers.push_back(s + 1);
    j["chain"] = {{"length", r.chain->chain_length},
                  {"exact", r.chain->exact},
                  {"servers", chain_servers},
                  {"h", r.chain->h_value},
                  {"optimality_applies", r.chain->optimality_applies},
                  {"consistent", r.chain->consistent}};
  } else {
    j["chain"] = nullptr;
  }
  return j;
}

}  // namespace seclsc
