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

#include "seclsc/cli.h"

#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "seclsc/builders.h"
#include "seclsc/enumerate.h"
#include "seclsc/errors.h"
#include "seclsc/h_recursion.h"
#include "seclsc/serialization.h"

namespace seclsc::cli {

namespace {

int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConstructionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitConstructionFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  }
}

// "c·W_i" terms joined with " + ", then the randomness terms.
std::string Combination(std::span<const uint64_t> row, int messages) {
  std::ostringstream s;
  bool first = true;
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (!first) s << " + ";
    first = false;
    if (row[i] != 1) s << row[i];
    if (static_cast<int>(i) < messages) {
      s << "W_" << i + 1;
    } else {
      s << "Q_" << i - messages + 1;
    }
  }
  return first ? "0" : s.str();
}

std::string SetText(const std::vector<int>& z) {
  std::ostringstream s;
  s << "{";
  for (size_t i = 0; i < z.size(); ++i) s << (i ? "," : "") << z[i] + 1;
  s << "}";
  return s.str();
}

void WriteOutput(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
}

void Header(std::ostream& out, const ProblemParams& p) {
  out << "# field=" << p.field.modulus() << " seed=" << p.seed << " K=" << p.k << " N=" << p.n
      << " N_r=" << p.n_r << " M=" << p.m << "\n";
}

}  // namespace

std::pair<int, int> ParseRange(const std::string& text) {
  auto parse = [&](const std::string& part) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw UsageError("bad range: " + text);
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse(text);
    return {v, v};
  }
  int lo = parse(text.substr(0, dots));
  int hi = parse(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range: " + text);
  return {lo, hi};
}

int RunDemo(const DemoOptions& options, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    ProblemParams p = ProblemParams::Make(3, 3, 2, options.field, options.seed);
    SchemeSpec spec = BuildCyclicScheme(p);
    Header(out, p);
    out << "cyclic scheme, lambda=" << spec.lambda << "\n\nanswers:\n";
    FieldMatrix rows = spec.ExpandedRows();
    for (int n = 0; n < p.n; ++n) {
      out << "  server " << n + 1 << " stores " << SetText(spec.assignment.set(n)) << ": X_" << n + 1
          << " = " << Combination(rows.row(n), spec.num_messages()) << "\n";
    }
    out << "\ndecoding W_1 + W_2 + W_3:\n";
    const RowVector target = spec.Target();
    for (int a = 0; a < p.n; ++a) {
      for (int b = a + 1; b < p.n; ++b) {
        std::vector<size_t> pick = {static_cast<size_t>(a), static_cast<size_t>(b)};
        auto u = SolveLeft(p.field, SelectRows(rows, pick), target);
        out << "  servers {" << a + 1 << "," << b + 1 << "}: ";
        if (u) {
          out << (*u)[0] << "*X_" << a + 1 << " + " << (*u)[1] << "*X_" << b + 1 << "\n";
        } else {
          out << "not decodable\n";
        }
      }
    }
    VerificationReport report = Verify(spec);
    out << "\nsecurity: " << (report.security.secure ? "secure" : "INSECURE") << " (rank "
        << report.security.rho << ", randomness-block rank " << report.security.q_block_rank << ")\n";
    out << "decodable on " << report.decodability.subsets_checked - report.decodability.failure_count << "/"
        << report.decodability.subsets_checked << " pairs\n";
    out << "communication cost " << report.costs.communication_cost << ", randomness size "
        << report.costs.randomness_size << "\n";
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? kExitPass : kExitVerificationFailed;
  });
}

int RunBuild(const BuildOptions& options, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    ProblemParams p = ProblemParams::Make(options.k.value_or(options.n), options.n, options.n_r,
                                          options.field, options.seed);
    SchemeSpec spec;
    if (options.scheme == "cyclic") {
      spec = BuildCyclicScheme(p);
    } else if (options.scheme == "frac-rep") {
      spec = BuildFractionalRepetitionScheme(p);
    } else if (options.scheme == "combined") {
      spec = BuildCombinedScheme(p);
    } else {
      throw UsageError("unknown scheme: " + options.scheme);
    }
    std::string json = ToJson(spec).dump(2) + "\n";
    std::ostream& summary = options.out.empty() ? err : out;
    Header(summary, p);
    summary << "scheme=" << options.scheme << " lambda=" << spec.lambda << " eta=" << spec.randomness_count
            << " cost=" << MeasureCosts(spec).communication_cost << "\n";
    WriteOutput(options.out, json, out);
    return kExitPass;
  });
}

int RunVerify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    std::ifstream f(options.in);
    if (!f) throw ParseError("cannot read " + options.in);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    SchemeSpec spec = SchemeSpecFromJson(j);
    seclsc::VerifyOptions vo;
    vo.mode = options.mode;
    vo.sample_count = options.sample_count;
    vo.sample_seed = spec.params.seed;
    VerificationReport report = Verify(spec, vo);
    out << ToJson(report).dump(2) << "\n";
    return report.passed() ? kExitPass : kExitVerificationFailed;
  });
}

int RunSweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    auto [n_lo, n_hi] = ParseRange(options.n_range);
    auto [m_lo, m_hi] = ParseRange(options.m_range);
    if (n_lo < 1 || m_lo < 1) throw UsageError("ranges must start at 1 or above");
    std::ostringstream csv;
    csv << "N,M_prime,eta_cyclic,eta_combined,eta_floor,optimal_flag\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      for (int m = m_lo; m <= std::min(m_hi, n); ++m) {
        int eta_cyclic = n - m;
        int eta_combined = HValue(n, m).value - 1;
        int eta_floor = (n + m - 1) / m - 1;
        if (!(eta_floor <= eta_combined && eta_combined <= eta_cyclic)) {
          throw IntegrityError("sweep row violates eta_floor <= eta_combined <= eta_cyclic");
        }
        csv << n << "," << m << "," << eta_cyclic << "," << eta_combined << "," << eta_floor << ","
            << (CombinedSchemeOptimal(n, m) ? 1 : 0) << "\n";
      }
    }
    WriteOutput(options.out, csv.str(), out);
    return kExitPass;
  });
}

int RunConverse(const ConverseOptions& options, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    ConverseResult r = ConverseMinMax(options.n, options.m);
    int h = HValue(options.n, options.m).value;
    out << "N=" << options.n << " M'=" << options.m << "\n";
    out << "min-max chain length: " << r.min_max_chain << " (randomness lower bound "
        << r.min_max_chain - 1 << ")\n";
    out << "h(N,M'): " << h << (r.min_max_chain == h ? " (match)" : " (differs)") << "\n";
    out << "combined scheme proven optimal here: " << (CombinedSchemeOptimal(options.n, options.m) ? "yes" : "no")
        << "\n";
    out << "assignments examined: " << r.examined << "\n";
    out << "witness: " << ToJson(r.witness).dump() << "\n";
    return kExitPass;
  });
}

}  // namespace seclsc::cli
