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

#ifndef STARTERS_TESTS_FIXTURES_H_
#define STARTERS_TESTS_FIXTURES_H_

#include <vector>

#include "starters/pairing.h"

namespace starters::fixtures {

// Smallest strong starter, in the order used for the demo table.
inline Pairing T7() { return Pairing(7, {{2, 3}, {4, 6}, {1, 5}}); }

// Demo extension for (T7, key 1).
inline std::vector<OrderedPair> DemoExtension() {
  return {{1, 1}, {2, 3}, {3, 4}, {5, 6}, {4, 6},
          {5, 0}, {2, 4}, {1, 5}, {2, 6}, {3, 0}};
}

// A known solution of the demo instance (U_i, V_i).
inline std::vector<OrderedPair> DemoSigma3() {
  return {{1, 2}, {1, 0}, {2, 0}, {1, 1}, {2, 2},
          {0, 2}, {0, 1}, {0, 2}, {2, 0}, {1, 1}};
}

// Demo solution merged as is, and after swapping 1 and 2.
inline Pairing DemoStarterA() {
  return Pairing(21, {{1, 8}, {16, 3}, {17, 18}, {19, 13}, {11, 20},
                      {12, 14}, {9, 4}, {15, 5}, {2, 6}, {10, 7}});
}
inline Pairing DemoStarterB() {
  return Pairing(21, {{8, 1}, {2, 3}, {10, 18}, {5, 20}, {4, 13},
                      {12, 7}, {9, 11}, {15, 19}, {16, 6}, {17, 14}});
}

// Worked order-21 starter whose mod-7 table has key 4 and first column T7.
inline Pairing S21() {
  return Pairing(21, {{11, 18}, {9, 17}, {13, 14}, {8, 2}, {4, 20},
                      {15, 3}, {5, 7}, {1, 12}, {19, 16}, {6, 10}});
}
inline std::vector<OrderedPair> S21Mod3() {
  return {{2, 0}, {0, 2}, {1, 2}, {2, 2}, {1, 2},
          {0, 0}, {2, 1}, {1, 0}, {1, 1}, {0, 1}};
}
inline std::vector<OrderedPair> S21Mod7() {
  return {{4, 4}, {2, 3}, {6, 0}, {1, 2}, {4, 6},
          {1, 3}, {5, 0}, {1, 5}, {5, 2}, {6, 3}};
}

// A second starter with the same mod-7 reduction.
inline Pairing S21Alt() {
  return Pairing(21, {{4, 18}, {16, 10}, {20, 7}, {8, 9}, {11, 13},
                      {1, 17}, {5, 14}, {15, 19}, {12, 2}, {6, 3}});
}
inline std::vector<OrderedPair> S21AltMod3() {
  return {{1, 0}, {1, 1}, {2, 1}, {2, 0}, {2, 1},
          {1, 2}, {2, 2}, {0, 1}, {0, 2}, {0, 0}};
}

// Order-21 strong starter that fails the row test at difference 3.
inline Pairing NotTriplicated21() {
  return Pairing(21, {{13, 12}, {19, 17}, {7, 4}, {10, 14}, {15, 20},
                      {3, 9}, {1, 8}, {5, 18}, {11, 2}, {16, 6}});
}

// Order-39 strong starter that passes the row test; its only preimage is
// (T13, key 4) with T13 a starter that is not strong.
inline Pairing Passing39() {
  return Pairing(39, {{2, 1},   {36, 34}, {6, 3},   {8, 12},  {38, 33},
                      {16, 10}, {18, 11}, {29, 21}, {22, 31}, {25, 15},
                      {13, 24}, {20, 32}, {30, 17}, {23, 37}, {19, 4},
                      {28, 5},  {26, 9},  {14, 35}, {7, 27}});
}
inline Pairing T13() {
  return Pairing(13, {{11, 10}, {6, 4}, {2, 12}, {9, 5}, {8, 3}, {7, 1}});
}

}  // namespace starters::fixtures

#endif  // STARTERS_TESTS_FIXTURES_H_
