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

#include "starters/hill_climb.h"

#include <random>
#include <string>
#include <vector>

#include "starters/errors.h"

namespace starters {
namespace {

class PartialStarter {
 public:
  explicit PartialStarter(int n)
      : n_(n),
        q_((n - 1) / 2),
        partner_(n, -1),
        diff_owner_(q_ + 1, -1),
        sum_owner_(n, -1),
        free_points_(n),
        free_diffs_(q_ + 1) {
    for (int x = 1; x < n; ++x) free_points_.Push(x);
    for (int d = 1; d <= q_; ++d) free_diffs_.Push(d);
  }

  bool Complete() const { return pair_count_ == q_; }

  // One step: uncovered point x, unused difference d, y = x +/- d. The pair
  // {x, y} may displace either the pair covering y or the pair already using
  // its sum, but not two different pairs. Returns false when wasted.
  bool Step(std::mt19937_64& rng) {
    const int x = free_points_.Random(rng);
    const int d = free_diffs_.Random(rng);
    const int y = (rng() & 1) ? (x + d) % n_ : (x - d + n_) % n_;
    const int s = (x + y) % n_;
    if (y == 0 || s == 0) return false;
    const int by_point = partner_[y] >= 0 ? y : -1;
    const int by_sum = sum_owner_[s];
    const bool same = by_point >= 0 && by_sum >= 0 &&
                      (by_sum == by_point || by_sum == partner_[by_point]);
    if (by_point >= 0 && by_sum >= 0 && !same) return false;
    if (by_point >= 0) Remove(by_point);
    if (by_sum >= 0 && !same) Remove(by_sum);
    Add(x, y);
    return true;
  }

  Pairing ToPairing() const {
    std::vector<OrderedPair> pairs;
    for (int x = 1; x < n_; ++x) {
      if (partner_[x] > x) pairs.push_back({x, partner_[x]});
    }
    return Normalize(Pairing(n_, std::move(pairs)));
  }

 private:
  // Set of small integers with O(1) insert, erase and uniform draw.
  class IndexedSet {
   public:
    explicit IndexedSet(int universe) : pos_(universe, -1) {}
    void Push(int v) {
      pos_[v] = static_cast<int>(items_.size());
      items_.push_back(v);
    }
    void Erase(int v) {
      const int at = pos_[v];
      items_[at] = items_.back();
      pos_[items_[at]] = at;
      items_.pop_back();
      pos_[v] = -1;
    }
    int Random(std::mt19937_64& rng) const {
      return items_[rng() % items_.size()];
    }

   private:
    std::vector<int> items_;
    std::vector<int> pos_;
  };

  int Diff(int x, int y) const {
    int d = (x - y + n_) % n_;
    return d > q_ ? n_ - d : d;
  }

  // Owners record one endpoint; `x` may be either endpoint of the pair.
  void Remove(int x) {
    const int y = partner_[x];
    const int d = Diff(x, y);
    diff_owner_[d] = -1;
    sum_owner_[(x + y) % n_] = -1;
    partner_[x] = partner_[y] = -1;
    free_points_.Push(x);
    free_points_.Push(y);
    free_diffs_.Push(d);
    --pair_count_;
  }

  void Add(int x, int y) {
    const int d = Diff(x, y);
    free_points_.Erase(x);
    free_points_.Erase(y);
    free_diffs_.Erase(d);
    partner_[x] = y;
    partner_[y] = x;
    diff_owner_[d] = x;
    sum_owner_[(x + y) % n_] = x;
    ++pair_count_;
  }

  int n_;
  int q_;
  int pair_count_ = 0;
  std::vector<int> partner_;
  std::vector<int> diff_owner_;
  std::vector<int> sum_owner_;
  IndexedSet free_points_;
  IndexedSet free_diffs_;
};

}  // namespace

Pairing HillClimb(int n, std::uint64_t seed, const HillClimbOptions& options) {
  if (n < 3 || n % 2 == 0) {
    throw StructuralError("hill-climb order must be odd, got " +
                          std::to_string(n));
  }
  if (n < 7 || n == 9) {
    throw Refusal("no strong starter of order " + std::to_string(n) +
                  " exists");
  }
  std::mt19937_64 rng(seed);
  PartialStarter state(n);
  const std::uint64_t restart =
      options.restart_steps > 0 ? options.restart_steps : 20ULL * n;
  std::uint64_t since_restart = 0;
  for (std::uint64_t step = 0; step < options.max_steps; ++step) {
    if (state.Complete()) return state.ToPairing();
    state.Step(rng);
    if (++since_restart == restart) {
      state = PartialStarter(n);
      since_restart = 0;
    }
  }
  if (state.Complete()) return state.ToPairing();
  throw Refusal("hill climbing for order " + std::to_string(n) +
                " exhausted " + std::to_string(options.max_steps) +
                " steps (seed " + std::to_string(seed) + ")");
}

}  // namespace starters
