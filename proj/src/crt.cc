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

#include "starters/crt.h"

#include <string>
#include <vector>

#include "starters/errors.h"

namespace starters {

CrtMap::CrtMap(int p) : p_(p) {
  if (p < 2 || p % 3 == 0) {
    throw Refusal("CRT with modulus 3 needs p coprime to 3, got " +
                  std::to_string(p));
  }
  // 3^-1 mod p: 3 * inv = 1 (mod p). p = 1 mod 3 gives inv = (2p + 1) / 3,
  // p = 2 mod 3 gives inv = (p + 1) / 3.
  const int inv3 = p % 3 == 1 ? (2 * p + 1) / 3 : (p + 1) / 3;
  const int invp = p % 3;  // p^-1 mod 3: 1 -> 1, 2 -> 2
  coeff_p_ = Mod(3LL * inv3, 3 * p);
  coeff_3_ = Mod(static_cast<long long>(p) * invp, 3 * p);
}

Pairing CrtMerge(const SudokuInstance& instance, const SudokuSolution& solution,
                 CrtVariant variant) {
  if (!CheckSolution(instance, solution).ok) {
    throw Refusal("cannot merge: the assignment violates the instance");
  }
  const SudokuSolution& mod3 =
      variant == CrtVariant::kPhi ? ApplyPhi(solution) : solution;
  const TriplicationTable& table = instance.table();
  const CrtMap crt(table.modulus());
  std::vector<OrderedPair> pairs;
  pairs.reserve(table.size());
  for (int i = 0; i < static_cast<int>(table.size()); ++i) {
    pairs.push_back(
        {crt.Combine(table[i].first, mod3.values[instance.u_var(i)]),
         crt.Combine(table[i].second, mod3.values[instance.v_var(i)])});
  }
  return Pairing(3 * table.modulus(), std::move(pairs));
}

Pairing CrtMerge(const TriplicationTable& table, const SudokuSolution& solution,
                 CrtVariant variant) {
  return CrtMerge(Encode(table), solution, variant);
}

}  // namespace starters
