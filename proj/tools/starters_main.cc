// Copyright 2026 The Strong Starters Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: verify, enumerate, hillclimb, triplicate, encode,
// solve, invert, series.
//
// Exit codes: 0 success (including UNSAT and a False verdict), 1 refusal,
// 2 malformed input or usage, 3 internal consistency failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "starters/dimacs.h"
#include "starters/enumerate.h"
#include "starters/errors.h"
#include "starters/harness.h"
#include "starters/hill_climb.h"
#include "starters/inverse.h"
#include "starters/pipeline.h"
#include "starters/starter_io.h"
#include "starters/sudoku_model.h"
#include "starters/sudoku_solver.h"
#include "starters/triplication.h"
#include "starters/verify.h"

namespace starters {
namespace {

using nlohmann::json;

json PairsJson(std::span<const OrderedPair> pairs) {
  json out = json::array();
  for (const OrderedPair& pr : pairs) out.push_back({pr.first, pr.second});
  return out;
}

json ReportJson(const VerificationReport& r) {
  json diagnostics = json::array();
  for (const Violation& v : r.diagnostics) diagnostics.push_back(v.message);
  return {{"is_partition", r.is_partition}, {"is_starter", r.is_starter},
          {"is_strong", r.is_strong},       {"pair_sums", r.pair_sums},
          {"diagnostics", diagnostics}};
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path);
  out << text;
}

// Writes to `path`, or stdout when it is empty or "-".
void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

VariableOrder ParseOrder(const std::string& name) {
  if (name == "linear") return VariableOrder::kLinearIndex;
  if (name == "random") return VariableOrder::kRandom;
  if (name == "min-domain") return VariableOrder::kMinDomain;
  throw StructuralError("unknown variable order '" + name + "'");
}

struct Options {
  std::string starter;
  std::string base;
  int key = 0;
  bool force = false;
  bool allow_nonstrong = false;
  std::uint64_t seed = 0;
  int order = 0;
  std::vector<int> orders;
  std::uint64_t samples = 1000;
  int repeats = 1;
  std::string out;
  std::string means_out;
  std::string cnf_out;
  std::string external_solver;
  std::string mode = "key-sweep";
  std::string var_order = "linear";
  std::uint64_t budget = 0;
  int bound = 21;
  std::size_t list_cap = 0;
  std::size_t solutions = 1;
};

SolverConfig MakeSolverConfig(const Options& o) {
  SolverConfig config;
  config.variable_order = ParseOrder(o.var_order);
  config.seed = o.seed;
  config.step_budget = o.budget;
  return config;
}

// Builds the table after the same base/key checks as the pipeline.
TriplicationTable LoadTable(const Options& o) {
  const Pairing base = LoadStarterFile(o.base);
  const VerificationReport report = VerifyPairing(base);
  if (!report.is_starter) {
    throw Refusal("base " + base.ToString() + " is not a starter");
  }
  if (!report.is_strong && !o.allow_nonstrong) {
    throw Refusal("base is not a strong starter (use --allow-nonstrong)");
  }
  const KeyAdmissibility admissible =
      CheckKeyAdmissible(base, Mod(o.key, base.modulus()));
  if (!admissible.admissible && !o.force) {
    throw Refusal("key " + std::to_string(o.key) + " is inadmissible (" +
                  admissible.reason + "); use --force to run anyway");
  }
  return TriplicationTable::Build(base, Mod(o.key, base.modulus()),
                                  {.allow_non_starter = true});
}

int RunVerify(const Options& o) {
  const Pairing p = LoadStarterFile(o.starter);
  json doc = ReportJson(VerifyPairing(p));
  doc["order"] = p.modulus();
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int RunEnumerate(const Options& o) {
  EnumerationOptions options;
  options.bound = o.bound;
  options.list_cap = o.list_cap;
  const EnumerationResult r = EnumerateStrongStarters(o.order, options);
  std::cout << "order " << o.order << ": " << r.count << " strong starters\n";
  if (!o.out.empty()) {
    json list = json::array();
    for (const Pairing& s : r.starters) {
      list.push_back({{"order", s.modulus()}, {"pairs", PairsJson(s.pairs())}});
    }
    WriteFile(o.out, list.dump() + "\n");
  }
  return 0;
}

int RunHillClimb(const Options& o) {
  const Pairing s = HillClimb(o.order, o.seed);
  Emit(o.out, ToJson(s) + "\n");
  return 0;
}

int RunTriplicate(const Options& o) {
  TriplicateOptions options;
  options.solver = MakeSolverConfig(o);
  options.force = o.force;
  options.allow_nonstrong = o.allow_nonstrong;
  const TriplicationOutcome outcome =
      Triplicate(LoadStarterFile(o.base), o.key, options);
  const std::string report = PipelineReportJson(outcome);
  const std::string prefix = o.out.empty() ? "triplication" : o.out;
  WriteFile(prefix + ".report.json", report);
  if (outcome.result) {
    SaveStarterFile(prefix + ".starter_a.json", outcome.result->starter_a);
    SaveStarterFile(prefix + ".starter_b.json", outcome.result->starter_b);
  }
  std::cout << ToString(outcome.status);
  if (!outcome.cause.empty()) std::cout << " (" << outcome.cause << ")";
  std::cout << "\n";
  if (outcome.result) {
    std::cout << outcome.result->starter_a.ToString() << "\n"
              << outcome.result->starter_b.ToString() << "\n";
  }
  return outcome.status == SolveStatus::kBudgetExhausted ? 1 : 0;
}

int RunEncode(const Options& o) {
  const SudokuInstance instance = Encode(LoadTable(o));
  std::cout << "variables " << instance.num_variables() << ", constraints "
            << instance.constraints().size() << "\n";
  if (instance.trivially_unsat()) {
    std::cout << "trivially UNSAT: " << *instance.trivially_unsat() << "\n";
  }
  if (o.cnf_out.empty()) {
    for (const Constraint& c : instance.constraints()) {
      std::cout << c.Describe() << "\n";
    }
  } else {
    WriteFile(o.cnf_out, ToDimacsText(ExportDimacs(instance)));
  }
  return 0;
}

int RunSolve(const Options& o) {
  const SudokuInstance instance = Encode(LoadTable(o));
  if (!o.cnf_out.empty()) {
    WriteFile(o.cnf_out, ToDimacsText(ExportDimacs(instance)));
  }
  json doc;
  std::vector<SudokuSolution> found;
  SolveStatus status;
  if (!o.external_solver.empty()) {
    const CnfDocument cnf = ExportDimacs(instance);
    const ExternalSolverResult r = RunExternalSolver(cnf, o.external_solver);
    status = r.status;
    if (status == SolveStatus::kSat) {
      found.push_back(ImportDimacsModel(cnf, r.model));
      const CheckResult check = CheckSolution(instance, found.back());
      if (!check.ok) {
        throw InternalError(
            "external model violates " +
            instance.constraints()[check.violated.front()].Describe());
      }
    }
    doc["solver"] = "external";
  } else if (o.solutions > 1) {
    const SolutionEnumeration e =
        EnumerateSolutions(instance, o.solutions, MakeSolverConfig(o));
    found = e.solutions;
    status = !found.empty()        ? SolveStatus::kSat
             : e.budget_exhausted ? SolveStatus::kBudgetExhausted
                                  : SolveStatus::kUnsat;
    doc["complete"] = e.complete;
    doc["decisions"] = e.stats.decisions;
    doc["solver"] = "native";
  } else {
    const SolveOutcome r = Solve(instance, MakeSolverConfig(o));
    status = r.status;
    if (r.solution) found.push_back(*r.solution);
    doc["decisions"] = r.stats.decisions;
    doc["backtracks"] = r.stats.backtracks;
    doc["solver"] = "native";
  }
  doc["status"] = ToString(status);
  json sols = json::array();
  for (const SudokuSolution& s : found) {
    sols.push_back(PairsJson(ExtractUV(instance, s)));
  }
  doc["solutions_mod3"] = sols;
  Emit(o.out, doc.dump(2) + "\n");
  return status == SolveStatus::kBudgetExhausted ? 1 : 0;
}

int RunInvert(const Options& o) {
  const Pairing s = LoadStarterFile(o.starter);
  const InverseVerdict v = InverseTest(s);
  json doc;
  doc["verdict"] = v.status == Verdict::kFalse ? "False" : "Inconclusive";
  if (v.failing_row) doc["failing_row"] = *v.failing_row;
  if (v.key) doc["key"] = *v.key;
  json candidates = json::array();
  for (const Candidate& c : v.candidates) {
    candidates.push_back({{"base", PairsJson(c.base.pairs())},
                          {"key", c.key},
                          {"base_report", ReportJson(c.report)}});
  }
  doc["candidates"] = candidates;
  Emit(o.out, doc.dump(2) + "\n");
  return 0;
}

int RunSeries(const Options& o) {
  SweepConfig config;
  config.solver = MakeSolverConfig(o);
  std::ostringstream csv;
  if (o.mode == "key-sweep") {
    WriteCsv(csv, RunKeySweep(LoadStarterFile(o.base), config));
  } else if (o.mode == "order-sweep") {
    WriteCsv(csv, RunOrderSweep(o.orders, o.seed, config));
  } else if (o.mode == "repeat-subseries") {
    const RepeatSeries series =
        RunRepeatSubseries(LoadStarterFile(o.base), o.repeats, config);
    WriteCsv(csv, series.records);
    if (!o.means_out.empty()) {
      std::ostringstream means;
      WriteKeyMeansCsv(means, series.means);
      WriteFile(o.means_out, means.str());
    }
  } else if (o.mode == "inverse-sampling") {
    const InverseSamplingSummary s =
        RunInverseSampling(o.order, o.samples, o.seed);
    csv << "order,samples,generated,failures,inconclusive,fraction\n"
        << s.order << ',' << s.samples << ',' << s.generated << ','
        << s.failures << ',' << s.inconclusive << ',' << s.fraction << '\n';
  } else {
    throw StructuralError("unknown series mode '" + o.mode + "'");
  }
  Emit(o.out, csv.str());
  return 0;
}

}  // namespace
}  // namespace starters

int main(int argc, char** argv) {
  using starters::Options;
  Options o;
  CLI::App app{"Strong starters: verification, triplication, inverse test"};
  app.require_subcommand(1);

  auto add_solver_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--var-order", o.var_order,
                    "linear | random | min-domain");
    cmd->add_option("--seed", o.seed, "seed for the random variable order");
    cmd->add_option("--budget", o.budget, "decision budget, 0 = unlimited");
  };
  auto add_base_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--base", o.base, "base starter file")->required();
    cmd->add_option("--key", o.key, "key t")->required();
    cmd->add_flag("--force", o.force, "run with an inadmissible key");
    cmd->add_flag("--allow-nonstrong", o.allow_nonstrong,
                  "accept a starter that is not strong");
  };

  auto* verify = app.add_subcommand("verify", "check starter properties");
  verify->add_option("--starter,starter", o.starter, "starter file")
      ->required();

  auto* enumerate = app.add_subcommand("enumerate", "count strong starters");
  enumerate->add_option("--order", o.order)->required();
  enumerate->add_option("--bound", o.bound, "largest accepted order");
  enumerate->add_option("--list-cap", o.list_cap, "starters to list");
  enumerate->add_option("--out", o.out, "JSON list output");

  auto* hill = app.add_subcommand("hillclimb", "generate a strong starter");
  hill->add_option("--order", o.order)->required();
  hill->add_option("--seed", o.seed);
  hill->add_option("--out", o.out, "output file (default stdout)");

  auto* trip = app.add_subcommand("triplicate", "base + key -> order 3p");
  add_base_flags(trip);
  add_solver_flags(trip);
  trip->add_option("--out", o.out,
                   "output prefix for .report.json, .starter_a.json, "
                   ".starter_b.json");

  auto* encode = app.add_subcommand("encode", "print or export the mod-3 CSP");
  add_base_flags(encode);
  encode->add_option("--cnf-out", o.cnf_out, "DIMACS output file");

  auto* solve = app.add_subcommand("solve", "solve the mod-3 CSP");
  add_base_flags(solve);
  add_solver_flags(solve);
  solve->add_option("--solutions", o.solutions, "enumerate up to this many");
  solve->add_option("--cnf-out", o.cnf_out, "also write DIMACS");
  solve->add_option("--external-solver", o.external_solver,
                    "command template, {cnf} is replaced by the file");
  solve->add_option("--out", o.out, "output file (default stdout)");

  auto* invert = app.add_subcommand("invert", "triplication-origin test");
  invert->add_option("--starter,starter", o.starter, "starter file")
      ->required();
  invert->add_option("--out", o.out, "output file (default stdout)");

  auto* series = app.add_subcommand("series", "experiment sweeps to CSV");
  series->add_option("--mode", o.mode,
                     "key-sweep | order-sweep | repeat-subseries | "
                     "inverse-sampling");
  series->add_option("--base", o.base, "base starter file");
  series->add_option("--orders", o.orders, "orders for order-sweep")
      ->delimiter(',');
  series->add_option("--order", o.order, "order 3p for inverse-sampling");
  series->add_option("--samples", o.samples);
  series->add_option("--repeats", o.repeats);
  series->add_option("--out", o.out, "CSV output (default stdout)");
  series->add_option("--means-out", o.means_out, "per-key mean CSV");
  add_solver_flags(series);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return starters::RunVerify(o);
    if (*enumerate) return starters::RunEnumerate(o);
    if (*hill) return starters::RunHillClimb(o);
    if (*trip) return starters::RunTriplicate(o);
    if (*encode) return starters::RunEncode(o);
    if (*solve) return starters::RunSolve(o);
    if (*invert) return starters::RunInvert(o);
    if (*series) return starters::RunSeries(o);
  } catch (const starters::Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const starters::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const starters::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
