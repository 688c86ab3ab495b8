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

#include "starters/verify.h"

#include <string>
#include <vector>

namespace starters {

VerificationReport VerifyPairing(const Pairing& pairing) {
  const int n = pairing.modulus();
  VerificationReport report;
  report.pair_sums = PairSums(pairing);
  report.pair_differences = PairDifferences(pairing);

  std::vector<int> element_count(n, 0);
  for (const OrderedPair& pr : pairing.pairs()) {
    ++element_count[pr.first];
    ++element_count[pr.second];
  }
  bool partition = true;
  if (element_count[0] > 0) {
    partition = false;
    report.diagnostics.push_back(
        {ViolationKind::kZeroElement, 0, "element 0 appears in a pair"});
  }
  for (int x = 1; x < n; ++x) {
    if (element_count[x] > 1) {
      partition = false;
      report.diagnostics.push_back(
          {ViolationKind::kDuplicateElement, x,
           "element " + std::to_string(x) + " appears " +
               std::to_string(element_count[x]) + " times"});
    } else if (element_count[x] == 0) {
      partition = false;
      report.diagnostics.push_back({ViolationKind::kMissingElement, x,
                                    "element " + std::to_string(x) +
                                        " is not covered"});
    }
  }

  std::vector<int> diff_count(n, 0);
  for (int d : report.pair_differences) ++diff_count[d];
  bool differences_cover = true;
  for (int d = 1; d < n; ++d) {
    if (diff_count[d] == 0) {
      differences_cover = false;
      report.diagnostics.push_back({ViolationKind::kMissingDifference, d,
                                    "difference " + std::to_string(d) +
                                        " is missing"});
    }
  }

  std::vector<int> sum_count(n, 0);
  for (int s : report.pair_sums) ++sum_count[s];
  bool sums_ok = true;
  if (sum_count[0] > 0) {
    sums_ok = false;
    report.diagnostics.push_back(
        {ViolationKind::kZeroSum, 0,
         std::to_string(sum_count[0]) + " pair(s) sum to 0"});
  }
  for (int s = 1; s < n; ++s) {
    if (sum_count[s] > 1) {
      sums_ok = false;
      report.diagnostics.push_back(
          {ViolationKind::kRepeatedSum, s,
           "sum " + std::to_string(s) + " occurs " +
               std::to_string(sum_count[s]) + " times"});
    }
  }

  report.is_partition = partition;
  report.is_starter = partition && differences_cover;
  report.is_strong = report.is_starter && sums_ok;
  return report;
}

}  // namespace starters
