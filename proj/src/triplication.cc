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

#include "starters/triplication.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "starters/errors.h"
#include "starters/verify.h"

namespace starters {

TableCell CellOfIndex(int j) {
  if (j == 0) return {0, 2};
  return {(j + 2) / 3, (j - 1) % 3 + 1};
}

int IndexOfCell(TableCell cell) {
  if (cell.row == 0) return 0;
  return 3 * cell.row - 3 + cell.column;
}

TriplicationTable TriplicationTable::Build(const Pairing& base, int key,
                                           const TableOptions& options) {
  const int p = base.modulus();
  if (p < 7 || std::gcd(p, 6) != 1) {
    throw Refusal("base order must be >= 7 and coprime to 6, got " +
                  std::to_string(p));
  }
  if (key < 0 || key >= p) {
    throw StructuralError("key " + std::to_string(key) + " outside [0, " +
                          std::to_string(p) + ")");
  }
  const bool is_starter = IsStarter(base);
  if (!is_starter && !options.allow_non_starter) {
    throw Refusal("base " + base.ToString() + " is not a starter");
  }
  std::vector<OrderedPair> ext;
  ext.reserve(3 * base.size() + 1);
  ext.push_back({key, key});
  for (const OrderedPair& pr : base.pairs()) {
    const int x = pr.first;
    const int y = pr.second;
    ext.push_back({x, y});
    ext.push_back({Mod(key + x, p), Mod(key + y, p)});
    ext.push_back({Mod(key - y, p), Mod(key - x, p)});
  }
  return TriplicationTable(base, key, std::move(ext), is_starter);
}

std::vector<int> RowDifferences(const TriplicationTable& table) {
  std::vector<int> out;
  out.reserve(table.size());
  for (const OrderedPair& pr : table.extension()) {
    out.push_back(Mod(pr.first - pr.second, table.modulus()));
  }
  return out;
}

std::vector<int> PairSumsModP(const TriplicationTable& table) {
  std::vector<int> out;
  out.reserve(table.size());
  for (const OrderedPair& pr : table.extension()) {
    out.push_back(Mod(pr.first + pr.second, table.modulus()));
  }
  return out;
}

std::vector<WeakSet> ComputeWeakSets(const TriplicationTable& table) {
  std::map<int, std::vector<int>> by_sum;
  const std::vector<int> sums = PairSumsModP(table);
  for (int j = 0; j < static_cast<int>(sums.size()); ++j) {
    by_sum[sums[j]].push_back(j);
  }
  std::vector<WeakSet> out;
  for (auto& [sum, members] : by_sum) {
    if (sum == 0 || members.size() > 1) out.push_back({sum, members});
  }
  return out;
}

MonochromeSets ComputeMonochromeSets(const TriplicationTable& table) {
  const int p = table.modulus();
  MonochromeSets out;
  out.sets.resize(p);
  for (int c = 0; c < p; ++c) out.sets[c].color = c;
  for (int i = 0; i < static_cast<int>(table.size()); ++i) {
    out.sets[table[i].first].positions.push_back({i, 0});
    out.sets[table[i].second].positions.push_back({i, 1});
  }
  for (int c = 0; c < p; ++c) {
    const std::size_t want = c == 0 ? 2 : 3;
    const std::size_t got = out.sets[c].positions.size();
    if (got != want) {
      out.diagnostics.push_back("color " + std::to_string(c) + " occurs " +
                                std::to_string(got) + " times, expected " +
                                std::to_string(want));
    }
  }
  out.sets[0].positions.push_back(Position::Dummy());
  return out;
}

KeyAdmissibility CheckKeyAdmissible(const Pairing& base, int key) {
  if (Mod(key, base.modulus()) == 0) return {false, "key is zero"};
  const std::vector<int> sums = PairSums(base);
  if (std::find(sums.begin(), sums.end(), key) != sums.end()) {
    return {false, "key in pair sums"};
  }
  return {true, "key admissible"};
}

std::vector<int> AdmissibleKeys(const Pairing& base) {
  std::vector<int> out;
  for (int t = 1; t < base.modulus(); ++t) {
    if (CheckKeyAdmissible(base, t).admissible) out.push_back(t);
  }
  return out;
}

}  // namespace starters
