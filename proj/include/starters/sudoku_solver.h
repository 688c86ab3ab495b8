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

#ifndef STARTERS_SUDOKU_SOLVER_H_
#define STARTERS_SUDOKU_SOLVER_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starters/sudoku_model.h"

namespace starters {

enum class VariableOrder {
  kLinearIndex,  // U0, V0, U1, V1, ... in extension order
  kRandom,       // U/V variables shuffled with the config seed
  kMinDomain,    // smallest current domain first, ties by linear index
};

struct SolverConfig {
  VariableOrder variable_order = VariableOrder::kLinearIndex;
  std::uint64_t seed = 0;
  // Maximum number of decisions; 0 means unlimited.
  std::uint64_t step_budget = 0;
};

enum class SolveStatus { kSat, kUnsat, kBudgetExhausted };

std::string ToString(SolveStatus status);  // "SAT", "UNSAT", "BUDGET"

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t backtracks = 0;    // decisions refuted by propagation
  std::uint64_t propagations = 0;  // constraint revisions
  std::chrono::nanoseconds duration{0};
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnsat;
  std::optional<SudokuSolution> solution;  // set iff status == kSat
  SolveStats stats;
};

// Complete chronological backtracking over ternary domains. Every constraint
// is kept generalized arc consistent by enumerating supports (arity <= 3);
// an AllDifferent over more than three variables fails immediately. Values
// are tried in the order 0, 1, 2. A returned solution always passes
// CheckSolution(); exhausting the budget is never reported as UNSAT.
SolveOutcome Solve(const SudokuInstance& instance,
                   const SolverConfig& config = {});

struct SolutionEnumeration {
  std::vector<SudokuSolution> solutions;  // search order, duplicate-free
  bool complete = false;          // the whole space was explored
  bool budget_exhausted = false;
  SolveStats stats;
};

// All solutions up to `cap` (cap >= 1). `complete` is false when the cap or
// the budget stopped the search.
SolutionEnumeration EnumerateSolutions(const SudokuInstance& instance,
                                       std::size_t cap,
                                       const SolverConfig& config = {});

}  // namespace starters

#endif  // STARTERS_SUDOKU_SOLVER_H_
