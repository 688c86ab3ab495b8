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

#ifndef STARTERS_ENUMERATE_H_
#define STARTERS_ENUMERATE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starters/pairing.h"

namespace starters {

struct EnumerationOptions {
  // Largest order accepted. Orders above 21 log a warning; the bitmask search
  // caps this at 61 regardless.
  int bound = 21;
  // Maximum number of starters materialized in the result; the count is
  // always exact.
  std::size_t list_cap = 0;
};

struct EnumerationResult {
  std::uint64_t count = 0;
  // Each listed starter has pairs (a, b) with a < b, sorted by a. Listing
  // order is the search order and does not depend on thread count.
  std::vector<Pairing> starters;
};

// Exact number of strong starters in Z_n, counted as sets of unordered pairs.
// Throws StructuralError for even n or n < 3 and Refusal above the bound.
// The search branches on the partner of element 1 in parallel.
EnumerationResult EnumerateStrongStarters(int n,
                                          const EnumerationOptions& options = {});

// Single-threaded reference for EnumerateStrongStarters.
EnumerationResult EnumerateStrongStartersSerial(
    int n, const EnumerationOptions& options = {});

}  // namespace starters

#endif  // STARTERS_ENUMERATE_H_
