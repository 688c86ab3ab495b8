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

#include "starters/harness.h"

#include <omp.h>
#include <openssl/evp.h>

#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "starters/errors.h"
#include "starters/hill_climb.h"
#include "starters/inverse.h"
#include "starters/pipeline.h"
#include "starters/starter_io.h"
#include "starters/triplication.h"
#include "starters/verify.h"

namespace starters {

bool RunRecord::SameOutcome(const RunRecord& o) const {
  return order_base == o.order_base && order_result == o.order_result &&
         key == o.key && status == o.status && decisions == o.decisions &&
         backtracks == o.backtracks && starter_digest == o.starter_digest &&
         seed == o.seed && subseries == o.subseries;
}

const std::string& CsvHeader() {
  static const std::string header =
      "order_base,order_result,key,status,solve_ms,decisions,backtracks,"
      "starter_digest,seed";
  return header;
}

std::string ToCsvRow(const RunRecord& r) {
  std::ostringstream out;
  out << r.order_base << ',' << r.order_result << ',';
  if (r.key) out << *r.key;
  out << ',' << ToString(r.status) << ',' << r.solve_ms << ',' << r.decisions
      << ',' << r.backtracks << ',' << r.starter_digest << ',';
  if (r.seed) out << *r.seed;
  return out.str();
}

void WriteCsv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << CsvHeader() << '\n';
  for (const RunRecord& r : records) out << ToCsvRow(r) << '\n';
}

std::string StarterDigest(const Pairing& starter) {
  const std::string text = ToText(Normalize(starter));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < 8 && i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

RunRecord RunOne(const Pairing& base, int key, const SweepConfig& config) {
  TriplicateOptions options;
  options.solver = config.solver;
  const TriplicationOutcome outcome = Triplicate(base, key, options);
  RunRecord r;
  r.order_base = base.modulus();
  r.order_result = 3 * base.modulus();
  r.key = key;
  r.status = outcome.status;
  r.solve_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   outcome.stats.duration)
                   .count();
  r.decisions = outcome.stats.decisions;
  r.backtracks = outcome.stats.backtracks;
  if (config.solver.variable_order == VariableOrder::kRandom) {
    r.seed = config.solver.seed;
  }
  if (outcome.result) {
    // Re-verify through a serialization round trip before digesting.
    const Pairing reloaded = ParseStarter(ToJson(outcome.result->starter_a));
    if (!IsStrongStarter(reloaded)) {
      throw InternalError("key " + std::to_string(key) +
                          ": merged starter failed re-verification");
    }
    r.starter_digest = StarterDigest(reloaded);
  }
  return r;
}

void RequireStrongBase(const Pairing& base) {
  if (!IsStrongStarter(base)) {
    throw Refusal("sweep base " + base.ToString() + " is not a strong starter");
  }
}

template <typename Fn>
void ParallelFor(int count, Fn&& fn) {
  // Exceptions may not cross an OpenMP region; the first one is rethrown.
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<RunRecord> RunKeySweep(const Pairing& base,
                                   const SweepConfig& config) {
  RequireStrongBase(base);
  const std::vector<int> keys = AdmissibleKeys(base);
  std::vector<RunRecord> records(keys.size());
  ParallelFor(static_cast<int>(keys.size()),
              [&](int i) { records[i] = RunOne(base, keys[i], config); });
  return records;
}

std::vector<RunRecord> RunKeySweepSerial(const Pairing& base,
                                         const SweepConfig& config) {
  RequireStrongBase(base);
  std::vector<RunRecord> records;
  for (int key : AdmissibleKeys(base)) {
    records.push_back(RunOne(base, key, config));
  }
  return records;
}

std::vector<RunRecord> RunOrderSweep(const std::vector<int>& orders,
                                     std::uint64_t seed,
                                     const SweepConfig& config) {
  std::vector<RunRecord> records(orders.size());
  ParallelFor(static_cast<int>(orders.size()), [&](int i) {
    const int p = orders[i];
    const std::uint64_t order_seed = MixSeed(seed, static_cast<std::uint64_t>(p));
    try {
      const Pairing base = HillClimb(p, order_seed);
      const std::vector<int> keys = AdmissibleKeys(base);
      std::mt19937_64 rng(order_seed);
      const int key = keys[rng() % keys.size()];
      records[i] = RunOne(base, key, config);
    } catch (const Refusal&) {
      RunRecord r;
      r.order_base = p;
      r.order_result = 3 * p;
      r.status = SolveStatus::kBudgetExhausted;
      records[i] = r;
    }
    records[i].seed = order_seed;
  });
  return records;
}

RepeatSeries RunRepeatSubseries(const Pairing& base, int repeats,
                                const SweepConfig& config) {
  RequireStrongBase(base);
  RepeatSeries series;
  std::map<int, KeyMean> by_key;
  for (int rep = 1; rep <= repeats; ++rep) {
    for (RunRecord& r : RunKeySweep(base, config)) {
      r.subseries = rep;
      KeyMean& m = by_key[*r.key];
      m.key = *r.key;
      m.mean_solve_ms += static_cast<double>(r.solve_ms);
      ++m.runs;
      series.records.push_back(std::move(r));
    }
  }
  for (auto& [key, m] : by_key) {
    m.mean_solve_ms /= m.runs;
    series.means.push_back(m);
  }
  return series;
}

void WriteKeyMeansCsv(std::ostream& out, const std::vector<KeyMean>& means) {
  out << "key,mean_solve_ms,runs\n";
  for (const KeyMean& m : means) {
    out << m.key << ',' << m.mean_solve_ms << ',' << m.runs << '\n';
  }
}

namespace {

// 1 = inconclusive, 0 = false, -1 = generation failure.
int SampleOnce(int order, std::uint64_t seed, std::uint64_t i) {
  try {
    const Pairing s = HillClimb(order, MixSeed(seed, i));
    return PassesRowTest(GroupRows(s)) ? 1 : 0;
  } catch (const Refusal&) {
    return -1;
  }
}

void CheckSamplingOrder(int order) {
  const int p = order / 3;
  if (order % 3 != 0 || p < 7 || std::gcd(p, 6) != 1) {
    throw Refusal("sampling order must be 3p with p >= 7 coprime to 6, got " +
                  std::to_string(order));
  }
}

InverseSamplingSummary Summarize(int order, std::uint64_t samples,
                                 std::uint64_t inconclusive,
                                 std::uint64_t failures) {
  InverseSamplingSummary s;
  s.order = order;
  s.samples = samples;
  s.failures = failures;
  s.generated = samples - failures;
  s.inconclusive = inconclusive;
  s.fraction = s.generated == 0 ? 0.0
                                : static_cast<double>(inconclusive) /
                                      static_cast<double>(s.generated);
  return s;
}

}  // namespace

InverseSamplingSummary RunInverseSampling(int order, std::uint64_t samples,
                                          std::uint64_t seed) {
  CheckSamplingOrder(order);
  std::uint64_t inconclusive = 0;
  std::uint64_t failures = 0;
  const long long total = static_cast<long long>(samples);
#pragma omp parallel for schedule(static) reduction(+ : inconclusive, failures)
  for (long long i = 0; i < total; ++i) {
    const int r = SampleOnce(order, seed, static_cast<std::uint64_t>(i));
    if (r > 0) ++inconclusive;
    if (r < 0) ++failures;
  }
  return Summarize(order, samples, inconclusive, failures);
}

InverseSamplingSummary RunInverseSamplingSerial(int order,
                                                std::uint64_t samples,
                                                std::uint64_t seed) {
  CheckSamplingOrder(order);
  std::uint64_t inconclusive = 0;
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const int r = SampleOnce(order, seed, i);
    if (r > 0) ++inconclusive;
    if (r < 0) ++failures;
  }
  return Summarize(order, samples, inconclusive, failures);
}

}  // namespace starters
