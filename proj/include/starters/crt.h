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

#ifndef STARTERS_CRT_H_
#define STARTERS_CRT_H_

#include "starters/pairing.h"
#include "starters/sudoku_model.h"
#include "starters/triplication.h"

namespace starters {

// Chinese remaindering for the moduli p and 3 (gcd(p, 3) = 1).
class CrtMap {
 public:
  // Throws Refusal if p is divisible by 3 or p < 2.
  explicit CrtMap(int p);

  int p() const { return p_; }
  // The unique x in [0, 3p) with x = residue_p (mod p) and x = residue_3
  // (mod 3). Arguments are reduced first.
  int Combine(int residue_p, int residue_3) const {
    return Mod(static_cast<long long>(Mod(residue_p, p_)) * coeff_p_ +
                   static_cast<long long>(Mod(residue_3, 3)) * coeff_3_,
               3 * p_);
  }

 private:
  int p_;
  int coeff_p_;  // 3 * (3^-1 mod p): = 1 mod p, = 0 mod 3
  int coeff_3_;  // p * (p^-1 mod 3): = 0 mod p, = 1 mod 3
};

inline int Crt(int residue_p, int residue_3, int p) {
  return CrtMap(p).Combine(residue_p, residue_3);
}

enum class CrtVariant {
  kIdentity,  // use (U_i, V_i) as solved
  kPhi,       // swap the values 1 and 2 first
};

// Pair i of the result is (crt(u_i, U_i), crt(v_i, V_i)), keeping the table's
// pair order and within-pair order; the result has order 3p. Throws Refusal if
// the solution does not pass CheckSolution() on Encode(table).
Pairing CrtMerge(const TriplicationTable& table, const SudokuSolution& solution,
                 CrtVariant variant);

// Same, with an instance already encoded from `table`.
Pairing CrtMerge(const SudokuInstance& instance, const SudokuSolution& solution,
                 CrtVariant variant);

}  // namespace starters

#endif  // STARTERS_CRT_H_
