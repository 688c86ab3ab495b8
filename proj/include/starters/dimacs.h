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

#ifndef STARTERS_DIMACS_H_
#define STARTERS_DIMACS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starters/sudoku_model.h"
#include "starters/sudoku_solver.h"

namespace starters {

// One-hot CNF encoding of a SudokuInstance. Ternary variable x taking value v
// is the boolean variable 3x + v + 1.
struct CnfDocument {
  int num_ternary = 0;
  int num_booleans = 0;
  std::vector<std::vector<int>> clauses;

  int Literal(int ternary_var, int value) const {
    return 3 * ternary_var + value + 1;
  }
  friend bool operator==(const CnfDocument&, const CnfDocument&) = default;
};

// Per ternary variable: one at-least-one clause and three pairwise at-most-one
// clauses. FixZero becomes a unit clause, every violating value combination of
// a LinearBinding is forbidden by one clause, and AllDifferent is expanded to
// (not x=v or not y=v) for every pair of its variables and every value.
CnfDocument ExportDimacs(const SudokuInstance& instance);

// "p cnf <vars> <clauses>" followed by one zero-terminated clause per line.
std::string ToDimacsText(const CnfDocument& doc);

// Parses DIMACS CNF, skipping "c" comment lines. The ternary count is
// recovered as vars / 3. Throws StructuralError with a line number.
CnfDocument ParseDimacs(std::string_view text);

// Decodes a boolean model given as signed literals (missing variables are
// false). Throws StructuralError naming the first ternary variable that is not
// exactly one-hot.
SudokuSolution ImportDimacsModel(const CnfDocument& doc,
                                 std::span<const int> literals);

// True iff the literal assignment satisfies every clause.
bool SatisfiesCnf(const CnfDocument& doc, std::span<const int> literals);

struct ExternalSolverResult {
  SolveStatus status = SolveStatus::kBudgetExhausted;  // unknown/no answer
  std::vector<int> model;                              // from "v" lines
  std::string raw_output;
};

// Reads SAT-competition output: "s SATISFIABLE" / "s UNSATISFIABLE" and "v"
// model lines; "c" lines and anything else are ignored. A missing status line
// maps to kBudgetExhausted.
ExternalSolverResult ParseSolverOutput(std::string_view output);

// Writes the document to a temporary file and runs `command_template` with
// every "{cnf}" replaced by that path (the path is appended when the template
// has no placeholder). Throws Refusal if the command cannot be started.
ExternalSolverResult RunExternalSolver(const CnfDocument& doc,
                                       const std::string& command_template);

}  // namespace starters

#endif  // STARTERS_DIMACS_H_
