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

#include "starters/enumerate.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <iostream>
#include <string>
#include <vector>

#include "starters/errors.h"

namespace starters {
namespace {

constexpr int kHardBound = 61;

void CheckOrder(int n, const EnumerationOptions& options) {
  if (n < 3 || n % 2 == 0) {
    throw StructuralError("enumeration order must be odd and >= 3, got " +
                          std::to_string(n));
  }
  const int bound = std::min(options.bound, kHardBound);
  if (n > bound) {
    throw Refusal("enumeration order " + std::to_string(n) +
                  " exceeds the configured bound " + std::to_string(bound));
  }
  if (n > 21) {
    std::clog << "warning: enumerating strong starters of order " << n
              << " may take a very long time\n";
  }
}

// Depth-first search that always pairs the smallest uncovered element, so each
// set of unordered pairs is produced exactly once.
class Search {
 public:
  Search(int n, std::size_t list_cap)
      : n_(n), q_((n - 1) / 2), list_cap_(list_cap) {
    pairs_.reserve(q_);
  }

  // Places the first pair {1, b} and explores everything below it.
  void RunBranch(int b) {
    if (!TryPlace(1, b)) return;
    Recurse();
    Unplace(1, b);
  }

  std::uint64_t count() const { return count_; }
  std::vector<Pairing>& listed() { return listed_; }

 private:
  bool TryPlace(int a, int b) {
    const int s = (a + b) % n_;
    if (s == 0 || (used_sums_ >> s & 1)) return false;
    int d = b - a;
    if (d > q_) d = n_ - d;
    if (used_diffs_ >> d & 1) return false;
    used_elems_ |= (1ULL << a) | (1ULL << b);
    used_sums_ |= 1ULL << s;
    used_diffs_ |= 1ULL << d;
    pairs_.push_back({a, b});
    return true;
  }

  void Unplace(int a, int b) {
    const int s = (a + b) % n_;
    int d = b - a;
    if (d > q_) d = n_ - d;
    used_elems_ &= ~((1ULL << a) | (1ULL << b));
    used_sums_ &= ~(1ULL << s);
    used_diffs_ &= ~(1ULL << d);
    pairs_.pop_back();
  }

  void Recurse() {
    if (static_cast<int>(pairs_.size()) == q_) {
      ++count_;
      if (listed_.size() < list_cap_) listed_.emplace_back(n_, pairs_);
      return;
    }
    // Elements live in bits 1..n-1; bit 0 is never set.
    const std::uint64_t free_elems =
        ~used_elems_ & (((1ULL << n_) - 1) & ~1ULL);
    const int a = std::countr_zero(free_elems);
    std::uint64_t rest = free_elems & ~(1ULL << a);
    while (rest != 0) {
      const int b = std::countr_zero(rest);
      rest &= rest - 1;
      if (TryPlace(a, b)) {
        Recurse();
        Unplace(a, b);
      }
    }
  }

  int n_;
  int q_;
  std::size_t list_cap_;
  std::uint64_t used_elems_ = 0;
  std::uint64_t used_sums_ = 0;
  std::uint64_t used_diffs_ = 0;
  std::vector<OrderedPair> pairs_;
  std::uint64_t count_ = 0;
  std::vector<Pairing> listed_;
};

}  // namespace

EnumerationResult EnumerateStrongStartersSerial(
    int n, const EnumerationOptions& options) {
  CheckOrder(n, options);
  Search search(n, options.list_cap);
  for (int b = 2; b < n; ++b) search.RunBranch(b);
  EnumerationResult result;
  result.count = search.count();
  result.starters = std::move(search.listed());
  return result;
}

EnumerationResult EnumerateStrongStarters(int n,
                                          const EnumerationOptions& options) {
  CheckOrder(n, options);
  const int branches = n - 2;  // partner of 1 ranges over 2..n-1
  std::vector<std::uint64_t> counts(branches, 0);
  std::vector<std::vector<Pairing>> lists(branches);

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < branches; ++i) {
    Search search(n, options.list_cap);
    search.RunBranch(i + 2);
    counts[i] = search.count();
    lists[i] = std::move(search.listed());
  }

  EnumerationResult result;
  for (int i = 0; i < branches; ++i) {
    result.count += counts[i];
    for (Pairing& p : lists[i]) {
      if (result.starters.size() >= options.list_cap) break;
      result.starters.push_back(std::move(p));
    }
  }
  return result;
}

}  // namespace starters
