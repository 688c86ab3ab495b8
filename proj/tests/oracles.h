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

#ifndef STARTERS_TESTS_ORACLES_H_
#define STARTERS_TESTS_ORACLES_H_

// Reference implementations written directly from the definitions. They share
// nothing with the library beyond the OrderedPair/Pairing value types, and
// favor plainness over speed.

#include <cstdint>
#include <vector>

#include "starters/pairing.h"

namespace starters::oracle {

using Pairs = std::vector<OrderedPair>;

// Starter / strong starter by set-counting over Z_n.
bool IsStarter(int n, const Pairs& pairs);
bool IsStrong(int n, const Pairs& pairs);

// Every perfect matching of {1, ..., n-1}, each pair written (small, large).
std::vector<Pairs> AllMatchings(int n);

// Number of matchings that are strong starters.
std::uint64_t CountStrong(int n);

// The extension tuple from its closed-form description.
Pairs Extension(const Pairs& base, int p, int key);

// x in [0, 3p) found by scanning, not by inverse arithmetic.
int CrtByScan(int residue_p, int residue_3, int p);

// Merges an extension mod p with (U_i, V_i) mod 3 into pairs mod 3p.
Pairs Merge(const Pairs& extension, int p, const Pairs& uv);

// The mod-3 conditions read straight off the table: distinct differences in
// each regular row; distinct sums within each group of equal sum mod p, and
// nonzero sums where the sum mod p is 0; distinct values over the places
// holding the same residue mod p, and nonzero values where that residue is 0.
bool SatisfiesTable(const Pairs& extension, int p, const Pairs& uv);

// Depth-first search over (U_i, V_i) in index order with SatisfiesTable's
// conditions checked pairwise as soon as both ends are assigned. Returns up to
// `cap` solutions (0 = no cap).
std::vector<Pairs> SolveTable(const Pairs& extension, int p,
                              std::size_t cap = 0);

// Whether some starter base of order p (any pair order and orientation) and
// key t yield an extension equal, as a multiset of unordered pairs, to the
// reduction of `starter` mod p.
bool HasTriplicationPreimage(const Pairing& starter);

}  // namespace starters::oracle

#endif  // STARTERS_TESTS_ORACLES_H_
