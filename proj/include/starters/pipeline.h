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

#ifndef STARTERS_PIPELINE_H_
#define STARTERS_PIPELINE_H_

#include <optional>
#include <string>

#include "starters/crt.h"
#include "starters/pairing.h"
#include "starters/sudoku_model.h"
#include "starters/sudoku_solver.h"
#include "starters/triplication.h"
#include "starters/verify.h"

namespace starters {

struct TriplicateOptions {
  SolverConfig solver;
  // Run even when the key is 0 or a pair sum of the base (always UNSAT).
  bool force = false;
  // Accept a base that is a starter but not a strong starter.
  bool allow_nonstrong = false;
};

struct TriplicationResult {
  Pairing starter_a;  // CRT merge of the solution as found
  Pairing starter_b;  // CRT merge of its phi-image
  SudokuSolution solution;
  VerificationReport report_a;
  VerificationReport report_b;
};

struct TriplicationOutcome {
  SolveStatus status = SolveStatus::kUnsat;
  TriplicationTable table;
  std::optional<TriplicationResult> result;  // set iff status == kSat
  // For UNSAT with a structural cause: "key is zero", "key in pair sums", or
  // the oversized constraint. Empty otherwise.
  std::string cause;
  SolveStats stats;
};

// Builds the table for (base, key), encodes and solves the mod-3 problem, and
// merges both phi-related solutions into starters of order 3p.
//
// Throws Refusal when the base is not a starter, when it is not strong and
// allow_nonstrong is unset, or when the key is inadmissible and force is
// unset. Throws InternalError if a merged starter fails verification, which
// cannot happen for a correct implementation.
TriplicationOutcome Triplicate(const Pairing& base, int key,
                               const TriplicateOptions& options = {});

// Structured report embedding base, key, extension, solution and flags.
std::string PipelineReportJson(const TriplicationOutcome& outcome);

}  // namespace starters

#endif  // STARTERS_PIPELINE_H_
