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

#ifndef STARTERS_PAIRING_H_
#define STARTERS_PAIRING_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace starters {

// Residue of `value` in [0, modulus).
constexpr int Mod(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

struct OrderedPair {
  int first = 0;
  int second = 0;

  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// An ordered tuple of (n-1)/2 ordered pairs of residues mod an odd n >= 3.
// Pair order and within-pair order are significant and never changed
// implicitly; use Normalize() for set-level comparison.
class Pairing {
 public:
  // Throws StructuralError if the modulus is even or < 3, the length is not
  // (modulus-1)/2, or an entry lies outside [0, modulus).
  Pairing(int modulus, std::vector<OrderedPair> pairs);

  int modulus() const { return modulus_; }
  std::size_t size() const { return pairs_.size(); }
  std::span<const OrderedPair> pairs() const { return pairs_; }
  const OrderedPair& operator[](std::size_t i) const { return pairs_[i]; }

  std::string ToString() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  int modulus_;
  std::vector<OrderedPair> pairs_;
};

// Entrywise reduction of a pairing (or an extension tuple) to a divisor of its
// modulus. Same length and order as the source.
struct ReducedTuple {
  int modulus = 0;
  std::vector<OrderedPair> pairs;

  friend bool operator==(const ReducedTuple&, const ReducedTuple&) = default;
};

// Throws StructuralError unless m divides the pairing's modulus.
ReducedTuple ReduceMod(const Pairing& pairing, int m);

// Sums (a_i + b_i) mod n in pair order, with multiplicity.
std::vector<int> PairSums(const Pairing& pairing);

// Both signed differences +(a_i - b_i) and -(a_i - b_i) mod n for every pair.
std::vector<int> PairDifferences(const Pairing& pairing);

// Orients each pair so (first - second) mod n lies in [0, (n-1)/2] and sorts
// the pairs. Two pairings describe the same set of unordered pairs iff their
// normalizations are equal.
Pairing Normalize(const Pairing& pairing);

}  // namespace starters

#endif  // STARTERS_PAIRING_H_
