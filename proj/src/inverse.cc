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

#include "starters/inverse.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "starters/errors.h"
#include "starters/triplication.h"

namespace starters {
namespace {

constexpr int kPermutations[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

OrderedPair Flip(OrderedPair pr) { return {pr.second, pr.first}; }

OrderedPair Unordered(OrderedPair pr) {
  return pr.first <= pr.second ? pr : Flip(pr);
}

// Orients so that (first - second) mod p lies in [0, (p-1)/2].
OrderedPair Oriented(OrderedPair pr, int p) {
  return Mod(pr.first - pr.second, p) > (p - 1) / 2 ? Flip(pr) : pr;
}

std::vector<Candidate> Reconstruct(const Pairing& starter,
                                   const RowGrouping& grouping) {
  const int p = grouping.p;
  const int q = (p - 1) / 2;
  const int t = grouping.key;

  // Distinct base-pair options per difference.
  std::vector<std::vector<OrderedPair>> options(q + 1);
  for (int d = 1; d <= q; ++d) {
    const RowGroup& row = grouping.rows[d];
    std::set<OrderedPair> firsts;
    for (const RowOrdering& o : PassingOrderings(row, t, p)) {
      firsts.insert(Oriented(row.members[o.order[0]], p));
    }
    if (firsts.empty()) return {};
    options[d].assign(firsts.begin(), firsts.end());
  }

  std::vector<Candidate> out;
  std::vector<std::size_t> pick(q + 1, 0);
  while (true) {
    std::vector<OrderedPair> base_pairs;
    for (int d = 1; d <= q; ++d) base_pairs.push_back(options[d][pick[d]]);
    Pairing base(p, std::move(base_pairs));
    const TriplicationTable table =
        TriplicationTable::Build(base, t, {.allow_non_starter = true});

    // Match table rows to R_d setwise and collect aligned mod-3 values.
    bool rows_match = true;
    std::vector<OrderedPair> uv(table.size());
    uv[0] = {starter[grouping.rows[0].source_indices[0]].first % 3,
             starter[grouping.rows[0].source_indices[0]].second % 3};
    for (int d = 1; d <= q && rows_match; ++d) {
      const RowGroup& row = grouping.rows[d];
      std::vector<bool> used(row.members.size(), false);
      for (int col = 1; col <= 3 && rows_match; ++col) {
        const int j = IndexOfCell({d, col});
        const OrderedPair cell = table[j];
        bool found = false;
        for (std::size_t m = 0; m < row.members.size() && !found; ++m) {
          if (used[m] || Unordered(row.members[m]) != Unordered(cell)) continue;
          used[m] = true;
          found = true;
          const OrderedPair src = starter[row.source_indices[m]];
          if (src.first % p == cell.first && src.second % p == cell.second) {
            uv[j] = {src.first % 3, src.second % 3};
          } else {
            uv[j] = {src.second % 3, src.first % 3};
          }
        }
        rows_match = found;
      }
    }
    if (rows_match) {
      const SudokuInstance instance = Encode(table);
      SudokuSolution aligned = CompleteFromUV(instance, uv);
      if (CheckSolution(instance, aligned).ok) {
        out.push_back({base, t, VerifyPairing(base), std::move(aligned)});
      }
    }

    int d = q;
    while (d >= 1 && ++pick[d] == options[d].size()) pick[d--] = 0;
    if (d < 1) break;
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return std::lexicographical_compare(a.base.pairs().begin(),
                                        a.base.pairs().end(),
                                        b.base.pairs().begin(),
                                        b.base.pairs().end());
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Candidate& a, const Candidate& b) {
                          return a.base == b.base;
                        }),
            out.end());
  return out;
}

}  // namespace

RowGrouping GroupRows(const Pairing& starter) {
  const int n = starter.modulus();
  const int p = n / 3;
  if (n % 3 != 0 || p < 7 || std::gcd(p, 6) != 1) {
    throw Refusal("order " + std::to_string(n) +
                  " is not 3p with p >= 7 coprime to 6");
  }
  if (!IsStarter(starter)) {
    throw StructuralError(starter.ToString() + " is not a starter");
  }
  const int q = (p - 1) / 2;
  RowGrouping grouping{p, 0, std::vector<RowGroup>(q + 1)};
  for (int d = 0; d <= q; ++d) grouping.rows[d].difference = d;
  for (int i = 0; i < static_cast<int>(starter.size()); ++i) {
    const OrderedPair pr =
        Oriented({starter[i].first % p, starter[i].second % p}, p);
    const int d = Mod(pr.first - pr.second, p);
    grouping.rows[d].members.push_back(pr);
    grouping.rows[d].source_indices.push_back(i);
  }
  const RowGroup& zero = grouping.rows[0];
  if (zero.members.size() != 1 ||
      zero.members[0].first != zero.members[0].second) {
    throw StructuralError("difference-0 row is not a single pair (t, t)");
  }
  for (int d = 1; d <= q; ++d) {
    if (grouping.rows[d].members.size() != 3) {
      throw StructuralError("row for difference " + std::to_string(d) +
                            " has " +
                            std::to_string(grouping.rows[d].members.size()) +
                            " pairs, expected 3");
    }
  }
  grouping.key = zero.members[0].first;
  return grouping;
}

std::vector<RowOrdering> PassingOrderings(const RowGroup& row, int key, int p) {
  std::vector<RowOrdering> out;
  if (row.members.size() != 3) return out;
  const int two_t = Mod(2LL * key, p);
  for (bool flipped : {false, true}) {
    for (const auto& perm : kPermutations) {
      OrderedPair pr[3];
      for (int k = 0; k < 3; ++k) {
        pr[k] = flipped ? Flip(row.members[perm[k]]) : row.members[perm[k]];
      }
      const auto& [u, v] = pr[0];
      const auto& [u1, v1] = pr[1];
      const auto& [u2, v2] = pr[2];
      if (Mod(u1 + v2, p) == two_t && Mod(v1 + u2, p) == two_t &&
          Mod(u1 - u, p) == Mod(key, p) && Mod(v1 - v, p) == Mod(key, p)) {
        out.push_back({{perm[0], perm[1], perm[2]}, flipped});
      }
    }
  }
  return out;
}

bool PassesRowTest(const RowGrouping& grouping) {
  for (std::size_t d = 1; d < grouping.rows.size(); ++d) {
    if (PassingOrderings(grouping.rows[d], grouping.key, grouping.p).empty()) {
      return false;
    }
  }
  return true;
}

InverseVerdict InverseTest(const Pairing& starter) {
  const RowGrouping grouping = GroupRows(starter);
  InverseVerdict verdict;
  for (std::size_t d = 1; d < grouping.rows.size(); ++d) {
    if (PassingOrderings(grouping.rows[d], grouping.key, grouping.p).empty()) {
      verdict.status = Verdict::kFalse;
      verdict.failing_row = static_cast<int>(d);
      return verdict;
    }
  }
  verdict.status = Verdict::kInconclusive;
  verdict.key = grouping.key;
  verdict.candidates = Reconstruct(starter, grouping);
  return verdict;
}

std::vector<Candidate> ReconstructCandidates(const Pairing& starter) {
  const RowGrouping grouping = GroupRows(starter);
  if (!PassesRowTest(grouping)) return {};
  return Reconstruct(starter, grouping);
}

}  // namespace starters
