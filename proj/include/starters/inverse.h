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

#ifndef STARTERS_INVERSE_H_
#define STARTERS_INVERSE_H_

#include <optional>
#include <vector>

#include "starters/pairing.h"
#include "starters/sudoku_model.h"
#include "starters/verify.h"

namespace starters {

// The pairs of S mod p whose difference is +/-d, each oriented so that
// (first - second) mod p lies in [0, q].
struct RowGroup {
  int difference = 0;
  std::vector<OrderedPair> members;
  std::vector<int> source_indices;  // index of each member's pair in S
};

struct RowGrouping {
  int p = 0;
  int key = 0;                // t, from the single difference-0 pair (t, t)
  std::vector<RowGroup> rows;  // rows[d] for d = 0..q
};

// Reduces a starter of order 3p modulo p and groups the pairs by difference.
// Throws Refusal unless the order is 3p with p >= 7 and gcd(p, 6) = 1, and
// StructuralError unless the input is a starter (which forces |R_0| = 1 and
// |R_d| = 3 for d != 0).
RowGrouping GroupRows(const Pairing& starter);

// An ordering of a row group that reads as a regular table row, possibly with
// every pair flipped: (u,v), (u',v'), (u'',v'') with
//   u' + v'' = v' + u'' = 2t  and  u' - u = v' - v = t  (mod p).
struct RowOrdering {
  int order[3];  // member indices in the order (u,v), (u',v'), (u'',v'')
  bool flipped;  // all three pairs read as (second, first)
};

// Every passing ordering (up to 12: 6 permutations x 2 orientations).
std::vector<RowOrdering> PassingOrderings(const RowGroup& row, int key, int p);

enum class Verdict { kFalse, kInconclusive };

struct Candidate {
  Pairing base;  // order p; pair for difference d at position d-1
  int key = 0;
  VerificationReport report;
  // The source's mod-3 reduction aligned to Encode(BuildTable(base, key)).
  SudokuSolution solution_mod3;
};

struct InverseVerdict {
  Verdict status = Verdict::kFalse;
  std::optional<int> key;            // present iff kInconclusive
  std::optional<int> failing_row;    // first d with no passing ordering
  std::vector<Candidate> candidates;  // empty iff kFalse
};

// Row test only: false iff some R_d (d != 0) has no passing ordering.
bool PassesRowTest(const RowGrouping& grouping);

InverseVerdict InverseTest(const Pairing& starter);

// For every combination of passing orderings across rows, takes the first
// pair of each row (oriented with difference in [1, q]) as the base pair for
// that difference. A candidate is kept only if triplicating it with key t
// reproduces every R_d setwise and the source's mod-3 reduction, placed on the
// matching positions, satisfies the resulting instance. Deduplicated, in
// lexicographic order of bases. Returns empty when the row test fails.
std::vector<Candidate> ReconstructCandidates(const Pairing& starter);

}  // namespace starters

#endif  // STARTERS_INVERSE_H_
