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

#ifndef STARTERS_TRIPLICATION_H_
#define STARTERS_TRIPLICATION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "starters/pairing.h"

namespace starters {

// Location of a pair in the table layout. Row 0 holds only the top pair (in
// column 2); regular rows 1..q hold three pairs in columns 1..3.
struct TableCell {
  int row = 0;
  int column = 0;

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

// Linear index j of the extension <-> table cell. Index 0 is the top pair;
// j >= 1 sits in row ceil(j/3), column ((j-1) mod 3) + 1.
TableCell CellOfIndex(int j);
int IndexOfCell(TableCell cell);

struct TableOptions {
  // Accept bases that are not starters. Only for experiments: table-invariant
  // guarantees downstream become diagnostics.
  bool allow_non_starter = false;
};

// Base starter T of order p, key t, and the extension of 3q+1 ordered pairs:
//   [(t,t), (x1,y1), (t+x1,t+y1), (t-y1,t-x1), (x2,y2), ...]  (mod p)
class TriplicationTable {
 public:
  // Throws Refusal unless p >= 7 and gcd(p, 6) = 1, and (without the override)
  // unless the base is a starter. Throws StructuralError for a key outside
  // [0, p).
  static TriplicationTable Build(const Pairing& base, int key,
                                 const TableOptions& options = {});

  const Pairing& base() const { return base_; }
  int key() const { return key_; }
  int modulus() const { return base_.modulus(); }
  int q() const { return static_cast<int>(base_.size()); }
  std::size_t size() const { return extension_.size(); }
  std::span<const OrderedPair> extension() const { return extension_; }
  const OrderedPair& operator[](std::size_t j) const { return extension_[j]; }
  bool base_is_starter() const { return base_is_starter_; }

  friend bool operator==(const TriplicationTable&,
                         const TriplicationTable&) = default;

 private:
  TriplicationTable(Pairing base, int key, std::vector<OrderedPair> extension,
                    bool base_is_starter)
      : base_(std::move(base)),
        key_(key),
        extension_(std::move(extension)),
        base_is_starter_(base_is_starter) {}

  Pairing base_;
  int key_;
  std::vector<OrderedPair> extension_;
  bool base_is_starter_;
};

// delta_j = (u_j - v_j) mod p for every extension index j.
std::vector<int> RowDifferences(const TriplicationTable& table);

// sigma_j = (u_j + v_j) mod p for every extension index j.
std::vector<int> PairSumsModP(const TriplicationTable& table);

struct WeakSet {
  int sum = 0;
  std::vector<int> members;  // ascending extension indices

  int type() const { return static_cast<int>(members.size()); }
  friend bool operator==(const WeakSet&, const WeakSet&) = default;
};

// All W_s with s = 0 or |W_s| > 1, ordered by s. Indices outside every weak
// set are the strong pairs.
std::vector<WeakSet> ComputeWeakSets(const TriplicationTable& table);

// <i, l>: entry l (0 for u_i, 1 for v_i) of extension pair i, or the dummy.
struct Position {
  static constexpr int kDummy = -1;
  int pair_index = 0;
  int slot = 0;

  static Position Dummy() { return {kDummy, kDummy}; }
  bool is_dummy() const { return pair_index == kDummy; }
  friend auto operator<=>(const Position&, const Position&) = default;
};

struct MonochromeSet {
  int color = 0;
  std::vector<Position> positions;  // ascending; the dummy is last in color 0
};

struct MonochromeSets {
  std::vector<MonochromeSet> sets;  // sets[c] has color c, c = 0..p-1
  // One entry per color whose cardinality differs from 3 (or 2 for color 0,
  // counted before the dummy is added). Empty for any starter base.
  std::vector<std::string> diagnostics;
};

MonochromeSets ComputeMonochromeSets(const TriplicationTable& table);

struct KeyAdmissibility {
  bool admissible = false;
  std::string reason;
};

// A key is admissible iff it is neither 0 nor a pair sum of the base.
KeyAdmissibility CheckKeyAdmissible(const Pairing& base, int key);

// Keys 1..p-1 outside the base's pair sums, ascending.
std::vector<int> AdmissibleKeys(const Pairing& base);

}  // namespace starters

#endif  // STARTERS_TRIPLICATION_H_
