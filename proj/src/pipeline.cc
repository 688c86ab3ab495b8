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

#include "starters/pipeline.h"

#include <string>

#include "json.hpp"
#include "starters/errors.h"

namespace starters {

TriplicationOutcome Triplicate(const Pairing& base, int key,
                               const TriplicateOptions& options) {
  const VerificationReport base_report = VerifyPairing(base);
  if (!base_report.is_starter) {
    throw Refusal("base " + base.ToString() + " is not a starter");
  }
  if (!base_report.is_strong && !options.allow_nonstrong) {
    throw Refusal("base " + base.ToString() +
                  " is not a strong starter (pass the non-strong override to "
                  "run anyway)");
  }
  const KeyAdmissibility admissible = CheckKeyAdmissible(base, Mod(key, base.modulus()));
  if (!admissible.admissible && !options.force) {
    throw Refusal("key " + std::to_string(key) + " is inadmissible (" +
                  admissible.reason +
                  "): a key equal to 0 or to a base pair sum always yields "
                  "an unsolvable mod-3 problem; use force to run anyway");
  }

  TriplicationOutcome outcome{SolveStatus::kUnsat,
                              TriplicationTable::Build(base, key),
                              std::nullopt,
                              {},
                              {}};
  const SudokuInstance instance = Encode(outcome.table);
  const SolveOutcome solved = Solve(instance, options.solver);
  outcome.status = solved.status;
  outcome.stats = solved.stats;

  if (solved.status == SolveStatus::kUnsat) {
    if (!admissible.admissible) {
      outcome.cause = admissible.reason;
    } else if (instance.trivially_unsat().has_value()) {
      outcome.cause = *instance.trivially_unsat();
    }
    return outcome;
  }
  if (solved.status != SolveStatus::kSat) return outcome;

  const SudokuSolution& sol = *solved.solution;
  Pairing a = CrtMerge(instance, sol, CrtVariant::kIdentity);
  Pairing b = CrtMerge(instance, sol, CrtVariant::kPhi);
  VerificationReport ra = VerifyPairing(a);
  VerificationReport rb = VerifyPairing(b);
  if (!ra.is_strong || !rb.is_strong) {
    throw InternalError("merged pairing for key " + std::to_string(key) +
                        " is not a strong starter: " + a.ToString());
  }
  outcome.result = TriplicationResult{std::move(a), std::move(b), sol,
                                      std::move(ra), std::move(rb)};
  return outcome;
}

namespace {

nlohmann::json PairsJson(std::span<const OrderedPair> pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (const OrderedPair& pr : pairs) out.push_back({pr.first, pr.second});
  return out;
}

nlohmann::json ReportJson(const VerificationReport& r) {
  return {{"is_partition", r.is_partition},
          {"is_starter", r.is_starter},
          {"is_strong", r.is_strong}};
}

}  // namespace

std::string PipelineReportJson(const TriplicationOutcome& outcome) {
  const TriplicationTable& table = outcome.table;
  nlohmann::json doc;
  doc["base"] = {{"order", table.modulus()},
                 {"pairs", PairsJson(table.base().pairs())}};
  doc["base_report"] = ReportJson(VerifyPairing(table.base()));
  doc["key"] = table.key();
  doc["extension"] = PairsJson(table.extension());
  doc["status"] = ToString(outcome.status);
  if (!outcome.cause.empty()) doc["cause"] = outcome.cause;
  doc["stats"] = {
      {"decisions", outcome.stats.decisions},
      {"backtracks", outcome.stats.backtracks},
      {"propagations", outcome.stats.propagations},
      {"solve_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(
           outcome.stats.duration)
           .count()}};
  if (outcome.result.has_value()) {
    const TriplicationResult& r = *outcome.result;
    const SudokuInstance instance = Encode(table);
    doc["solution_mod3"] = PairsJson(ExtractUV(instance, r.solution));
    doc["starter_a"] = {{"order", r.starter_a.modulus()},
                        {"pairs", PairsJson(r.starter_a.pairs())},
                        {"report", ReportJson(r.report_a)}};
    doc["starter_b"] = {{"order", r.starter_b.modulus()},
                        {"pairs", PairsJson(r.starter_b.pairs())},
                        {"report", ReportJson(r.report_b)}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace starters
