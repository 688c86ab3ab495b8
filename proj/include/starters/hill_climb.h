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

#ifndef STARTERS_HILL_CLIMB_H_
#define STARTERS_HILL_CLIMB_H_

#include <cstdint>

#include "starters/pairing.h"

namespace starters {

struct HillClimbOptions {
  std::uint64_t max_steps = 1'000'000;
  // Start over from the empty state after this many steps; 0 means 20 * n.
  std::uint64_t restart_steps = 0;
};

// Randomized hill climbing for a strong starter of order n.
//
// The state is a partial strong starter: disjoint pairs with distinct
// differences (up to sign) and distinct nonzero sums. Each step draws an
// uncovered element x, an unused difference d and a sign, and proposes
// {x, x +/- d}. The pair is added if it conflicts with nothing, swapped in if
// it collides with exactly one existing pair (on its other element or on its
// sum), and otherwise the step is wasted. The result is normalized (see
// Normalize()) and depends only on (n, seed).
//
// Throws StructuralError for even n, Refusal for n < 7 or n == 9 (no strong
// starter exists for 3, 5, 9), and Refusal when the step budget runs out.
Pairing HillClimb(int n, std::uint64_t seed,
                  const HillClimbOptions& options = {});

}  // namespace starters

#endif  // STARTERS_HILL_CLIMB_H_
