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

#include "starters/sudoku_solver.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "starters/errors.h"

namespace starters {

std::string ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSat: return "SAT";
    case SolveStatus::kUnsat: return "UNSAT";
    case SolveStatus::kBudgetExhausted: return "BUDGET";
  }
  return "?";
}

namespace {

using Domains = std::vector<std::uint8_t>;  // bit v set <=> value v allowed

constexpr std::uint8_t kFull = 0b111;

bool Satisfied(const Constraint& c, const int* vals) {
  switch (c.kind) {
    case ConstraintKind::kFixZero:
      return vals[0] == 0;
    case ConstraintKind::kLinearBinding:
      return Mod(vals[0] + c.sign * vals[1] - vals[2], 3) == 0;
    case ConstraintKind::kAllDifferent:
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        for (std::size_t j = i + 1; j < c.vars.size(); ++j) {
          if (vals[i] == vals[j]) return false;
        }
      }
      return true;
  }
  return false;
}

class Engine {
 public:
  Engine(const SudokuInstance& instance, const SolverConfig& config,
         std::size_t cap)
      : instance_(instance),
        config_(config),
        cap_(cap),
        constraints_(instance.constraints()),
        watches_(instance.num_variables()),
        in_queue_(constraints_.size(), false) {
    for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
      for (int v : constraints_[ci].vars) watches_[v].push_back(ci);
    }
    const int uv = static_cast<int>(2 * instance.num_pairs());
    order_.resize(instance.num_variables());
    std::iota(order_.begin(), order_.end(), 0);
    if (config.variable_order == VariableOrder::kRandom) {
      std::mt19937_64 rng(config.seed);
      std::shuffle(order_.begin(), order_.begin() + uv, rng);
    }
  }

  void Run() {
    const auto start = std::chrono::steady_clock::now();
    Domains dom(instance_.num_variables(), kFull);
    if (!instance_.trivially_unsat().has_value()) {
      for (std::size_t ci = 0; ci < constraints_.size(); ++ci) Enqueue(ci);
      if (Propagate(dom)) Dfs(dom, 0);
    }
    stats_.duration = std::chrono::steady_clock::now() - start;
  }

  std::vector<SudokuSolution>& solutions() { return solutions_; }
  const SolveStats& stats() const { return stats_; }
  bool budget_exhausted() const { return budget_exhausted_; }
  bool stopped() const { return stopped_; }

 private:
  void Enqueue(std::size_t ci) {
    if (!in_queue_[ci]) {
      in_queue_[ci] = true;
      queue_.push_back(ci);
    }
  }

  void ClearQueue() {
    for (std::size_t ci : queue_) in_queue_[ci] = false;
    queue_.clear();
  }

  // Narrows the constraint's variables to supported values. Returns false on
  // a wipe-out.
  bool Revise(std::size_t ci, Domains& dom) {
    ++stats_.propagations;
    const Constraint& c = constraints_[ci];
    const std::size_t arity = c.vars.size();
    if (arity > 3) return false;  // only AllDifferent can be this wide
    std::uint8_t support[3] = {0, 0, 0};
    int vals[3] = {0, 0, 0};
    // Odometer over the Cartesian product of the current domains.
    int digit[3] = {0, 0, 0};
    std::uint8_t d[3] = {0, 0, 0};
    for (std::size_t i = 0; i < arity; ++i) d[i] = dom[c.vars[i]];
    while (true) {
      bool valid = true;
      for (std::size_t i = 0; i < arity; ++i) {
        if (!(d[i] >> digit[i] & 1)) {
          valid = false;
          break;
        }
        vals[i] = digit[i];
      }
      if (valid && Satisfied(c, vals)) {
        for (std::size_t i = 0; i < arity; ++i) {
          support[i] |= static_cast<std::uint8_t>(1u << vals[i]);
        }
      }
      std::size_t pos = 0;
      while (pos < arity && ++digit[pos] == 3) digit[pos++] = 0;
      if (pos == arity) break;
    }
    for (std::size_t i = 0; i < arity; ++i) {
      const int v = c.vars[i];
      const std::uint8_t narrowed = dom[v] & support[i];
      if (narrowed == 0) return false;
      if (narrowed != dom[v]) {
        dom[v] = narrowed;
        for (std::size_t other : watches_[v]) {
          if (other != ci) Enqueue(other);
        }
      }
    }
    return true;
  }

  bool Propagate(Domains& dom) {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t ci = queue_[head];
      in_queue_[ci] = false;
      if (!Revise(ci, dom)) {
        ClearQueue();
        return false;
      }
    }
    queue_.clear();
    return true;
  }

  int PickVariable(const Domains& dom, std::size_t& pos) const {
    if (config_.variable_order == VariableOrder::kMinDomain) {
      int best = -1;
      int best_size = 4;
      for (int v : order_) {
        const int size = std::popcount(dom[v]);
        if (size > 1 && size < best_size) {
          best = v;
          best_size = size;
          if (size == 2) break;
        }
      }
      return best;
    }
    while (pos < order_.size() && std::popcount(dom[order_[pos]]) == 1) ++pos;
    return pos < order_.size() ? order_[pos] : -1;
  }

  void Dfs(const Domains& dom, std::size_t pos) {
    const int x = PickVariable(dom, pos);
    if (x < 0) {
      SudokuSolution sol;
      sol.values.resize(dom.size());
      for (std::size_t v = 0; v < dom.size(); ++v) {
        sol.values[v] = static_cast<std::uint8_t>(std::countr_zero(dom[v]));
      }
      solutions_.push_back(std::move(sol));
      if (solutions_.size() >= cap_) stopped_ = true;
      return;
    }
    for (int value = 0; value < 3 && !stopped_; ++value) {
      if (!(dom[x] >> value & 1)) continue;
      if (config_.step_budget != 0 &&
          stats_.decisions >= config_.step_budget) {
        budget_exhausted_ = true;
        stopped_ = true;
        return;
      }
      ++stats_.decisions;
      Domains child = dom;
      child[x] = static_cast<std::uint8_t>(1u << value);
      for (std::size_t ci : watches_[x]) Enqueue(ci);
      if (Propagate(child)) {
        Dfs(child, pos + 1);
      } else {
        ++stats_.backtracks;
      }
    }
  }

  const SudokuInstance& instance_;
  SolverConfig config_;
  std::size_t cap_;
  std::span<const Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<int> order_;
  std::vector<std::size_t> queue_;
  std::vector<bool> in_queue_;
  std::vector<SudokuSolution> solutions_;
  SolveStats stats_;
  bool budget_exhausted_ = false;
  bool stopped_ = false;
};

}  // namespace

SolveOutcome Solve(const SudokuInstance& instance, const SolverConfig& config) {
  Engine engine(instance, config, 1);
  engine.Run();
  SolveOutcome out;
  out.stats = engine.stats();
  if (!engine.solutions().empty()) {
    out.status = SolveStatus::kSat;
    out.solution = std::move(engine.solutions().front());
    if (!CheckSolution(instance, *out.solution).ok) {
      throw InternalError("solver produced an assignment that fails the check");
    }
  } else {
    out.status = engine.budget_exhausted() ? SolveStatus::kBudgetExhausted
                                           : SolveStatus::kUnsat;
  }
  return out;
}

SolutionEnumeration EnumerateSolutions(const SudokuInstance& instance,
                                       std::size_t cap,
                                       const SolverConfig& config) {
  if (cap == 0) throw StructuralError("solution cap must be >= 1");
  Engine engine(instance, config, cap);
  engine.Run();
  SolutionEnumeration out;
  out.solutions = std::move(engine.solutions());
  out.budget_exhausted = engine.budget_exhausted();
  out.complete = !engine.stopped();
  out.stats = engine.stats();
  for (const SudokuSolution& s : out.solutions) {
    if (!CheckSolution(instance, s).ok) {
      throw InternalError("enumerated assignment fails the check");
    }
  }
  return out;
}

}  // namespace starters
