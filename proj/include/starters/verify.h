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

#ifndef STARTERS_VERIFY_H_
#define STARTERS_VERIFY_H_

#include <string>
#include <vector>

#include "starters/pairing.h"

namespace starters {

enum class ViolationKind {
  kZeroElement,        // 0 appears as a pair entry
  kDuplicateElement,   // a nonzero residue appears more than once
  kMissingElement,     // a nonzero residue is not covered
  kMissingDifference,  // a nonzero residue is not a +/- pair difference
  kRepeatedSum,        // two pairs share a sum
  kZeroSum,            // a pair sums to 0
};

struct Violation {
  ViolationKind kind;
  int value;  // the offending residue
  std::string message;
};

struct VerificationReport {
  bool is_partition = false;
  bool is_starter = false;
  bool is_strong = false;
  std::vector<int> pair_sums;         // in pair order
  std::vector<int> pair_differences;  // +d, -d for each pair, in pair order
  std::vector<Violation> diagnostics;
};

// Checks the starter and strong-starter properties by definition. The
// pairing type already guarantees well-formedness, so every outcome here is a
// flag, never an exception.
VerificationReport VerifyPairing(const Pairing& pairing);

inline bool IsStarter(const Pairing& pairing) {
  return VerifyPairing(pairing).is_starter;
}
inline bool IsStrongStarter(const Pairing& pairing) {
  return VerifyPairing(pairing).is_strong;
}

}  // namespace starters

#endif  // STARTERS_VERIFY_H_
