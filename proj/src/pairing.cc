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

#include "starters/pairing.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "starters/errors.h"

namespace starters {

Pairing::Pairing(int modulus, std::vector<OrderedPair> pairs)
    : modulus_(modulus), pairs_(std::move(pairs)) {
  if (modulus_ < 3 || modulus_ % 2 == 0) {
    throw StructuralError("pairing modulus must be odd and >= 3, got " +
                          std::to_string(modulus_));
  }
  const std::size_t expected = static_cast<std::size_t>((modulus_ - 1) / 2);
  if (pairs_.size() != expected) {
    throw StructuralError("pairing of order " + std::to_string(modulus_) +
                          " needs " + std::to_string(expected) +
                          " pairs, got " + std::to_string(pairs_.size()));
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (int x : {pairs_[i].first, pairs_[i].second}) {
      if (x < 0 || x >= modulus_) {
        throw StructuralError("pair " + std::to_string(i) + " entry " +
                              std::to_string(x) + " outside [0, " +
                              std::to_string(modulus_) + ")");
      }
    }
  }
}

std::string Pairing::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out << ", ";
    out << '(' << pairs_[i].first << ',' << pairs_[i].second << ')';
  }
  out << "] mod " << modulus_;
  return out.str();
}

ReducedTuple ReduceMod(const Pairing& pairing, int m) {
  if (m < 1 || pairing.modulus() % m != 0) {
    throw StructuralError("cannot reduce a pairing of order " +
                          std::to_string(pairing.modulus()) + " modulo " +
                          std::to_string(m));
  }
  ReducedTuple out{m, {}};
  out.pairs.reserve(pairing.size());
  for (const OrderedPair& pr : pairing.pairs()) {
    out.pairs.push_back({pr.first % m, pr.second % m});
  }
  return out;
}

std::vector<int> PairSums(const Pairing& pairing) {
  std::vector<int> sums;
  sums.reserve(pairing.size());
  for (const OrderedPair& pr : pairing.pairs()) {
    sums.push_back(Mod(pr.first + pr.second, pairing.modulus()));
  }
  return sums;
}

std::vector<int> PairDifferences(const Pairing& pairing) {
  std::vector<int> diffs;
  diffs.reserve(2 * pairing.size());
  for (const OrderedPair& pr : pairing.pairs()) {
    diffs.push_back(Mod(pr.first - pr.second, pairing.modulus()));
    diffs.push_back(Mod(pr.second - pr.first, pairing.modulus()));
  }
  return diffs;
}

Pairing Normalize(const Pairing& pairing) {
  const int n = pairing.modulus();
  const int q = (n - 1) / 2;
  std::vector<OrderedPair> pairs(pairing.pairs().begin(),
                                 pairing.pairs().end());
  for (OrderedPair& pr : pairs) {
    if (Mod(pr.first - pr.second, n) > q) std::swap(pr.first, pr.second);
  }
  std::sort(pairs.begin(), pairs.end());
  return Pairing(n, std::move(pairs));
}

}  // namespace starters
