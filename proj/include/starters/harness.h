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

#ifndef STARTERS_HARNESS_H_
#define STARTERS_HARNESS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "starters/pairing.h"
#include "starters/sudoku_solver.h"

namespace starters {

// One pipeline run. Serialized as one CSV row under CsvHeader().
struct RunRecord {
  int order_base = 0;
  int order_result = 0;
  std::optional<int> key;  // absent when no base could be generated
  SolveStatus status = SolveStatus::kUnsat;
  std::int64_t solve_ms = 0;
  std::uint64_t decisions = 0;
  std::uint64_t backtracks = 0;
  std::string starter_digest;  // non-empty iff status == kSat
  std::optional<std::uint64_t> seed;
  int subseries = 0;  // 1-based for repeat runs, 0 otherwise; not in the CSV

  // Equality ignoring solve_ms.
  bool SameOutcome(const RunRecord& other) const;
};

// "order_base,order_result,key,status,solve_ms,decisions,backtracks,
//  starter_digest,seed"
const std::string& CsvHeader();
std::string ToCsvRow(const RunRecord& record);
void WriteCsv(std::ostream& out, const std::vector<RunRecord>& records);

// First 16 hex digits of SHA-256 over the normalized starter's text form.
std::string StarterDigest(const Pairing& starter);

struct SweepConfig {
  SolverConfig solver;
};

// One record per admissible key, ascending. Each SAT starter is re-verified
// before digesting; a failure throws InternalError naming the key. The base
// must be a strong starter (Refusal otherwise). Keys run in parallel; the
// result order does not depend on scheduling.
std::vector<RunRecord> RunKeySweep(const Pairing& base,
                                   const SweepConfig& config = {});
std::vector<RunRecord> RunKeySweepSerial(const Pairing& base,
                                         const SweepConfig& config = {});

// Per order: hill-climb a base with a seed derived from (seed, order), draw a
// seeded admissible key, run the pipeline. A hill-climb failure yields a
// BUDGET record without a key instead of aborting.
std::vector<RunRecord> RunOrderSweep(const std::vector<int>& orders,
                                     std::uint64_t seed,
                                     const SweepConfig& config = {});

struct KeyMean {
  int key = 0;
  double mean_solve_ms = 0;
  int runs = 0;
};

struct RepeatSeries {
  std::vector<RunRecord> records;  // subseries 1..repeats, keys ascending
  std::vector<KeyMean> means;      // one per admissible key, ascending
};

RepeatSeries RunRepeatSubseries(const Pairing& base, int repeats,
                                const SweepConfig& config = {});

// "key,mean_solve_ms,runs"
void WriteKeyMeansCsv(std::ostream& out, const std::vector<KeyMean>& means);

struct InverseSamplingSummary {
  int order = 0;
  std::uint64_t samples = 0;
  std::uint64_t generated = 0;     // hill climbs that succeeded
  std::uint64_t failures = 0;      // hill climbs that ran out of steps
  std::uint64_t inconclusive = 0;  // passed the row test
  double fraction = 0;             // inconclusive / generated

  friend bool operator==(const InverseSamplingSummary&,
                         const InverseSamplingSummary&) = default;
};

// Hill-climbs `samples` strong starters of order 3p (sample i uses a seed
// derived from (seed, i); repetitions are allowed) and applies the row test to
// each. Samples run in parallel; the summary is independent of thread count.
InverseSamplingSummary RunInverseSampling(int order, std::uint64_t samples,
                                          std::uint64_t seed);
InverseSamplingSummary RunInverseSamplingSerial(int order,
                                                std::uint64_t samples,
                                                std::uint64_t seed);

// SplitMix64 step, used to derive per-task seeds.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace starters

#endif  // STARTERS_HARNESS_H_
