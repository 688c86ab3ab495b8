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

#include "starters/sudoku_model.h"

#include <sstream>
#include <string>

#include "starters/errors.h"

namespace starters {

std::string TernaryVariable::Name() const {
  switch (role) {
    case VarRole::kU: return "U" + std::to_string(index);
    case VarRole::kV: return "V" + std::to_string(index);
    case VarRole::kD: return "D" + std::to_string(index);
    case VarRole::kS: return "S" + std::to_string(index);
    case VarRole::kZ: return "Z";
  }
  return "?";
}

std::string Constraint::Describe() const {
  std::ostringstream out;
  switch (origin) {
    case Origin::kDummy: out << "dummy Z = 0"; break;
    case Origin::kDifferenceBinding:
      out << "difference binding for pair " << origin_index;
      break;
    case Origin::kSumBinding:
      out << "sum binding for pair " << origin_index;
      break;
    case Origin::kRow: out << "row " << origin_index << " differences"; break;
    case Origin::kWeakSet:
      out << "weak set with sum " << origin_index;
      break;
    case Origin::kZeroWeakSet: out << "weak set with sum 0"; break;
    case Origin::kColor: out << "color " << origin_index; break;
  }
  out << " (" << vars.size() << " vars)";
  return out.str();
}

SudokuInstance Encode(const TriplicationTable& table) {
  SudokuInstance inst(table);
  const int k = static_cast<int>(table.size());
  const int q = table.q();

  for (int i = 0; i < k; ++i) {
    inst.variables_.push_back({2 * i, VarRole::kU, i});
    inst.variables_.push_back({2 * i + 1, VarRole::kV, i});
  }
  for (int i = 0; i < k; ++i) {
    inst.variables_.push_back({2 * k + i, VarRole::kD, i});
  }

  const std::vector<WeakSet> weak_sets = ComputeWeakSets(table);
  std::vector<bool> weak(k, false);
  for (const WeakSet& w : weak_sets) {
    for (int i : w.members) weak[i] = true;
  }
  inst.s_var_.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    if (!weak[i]) continue;
    const int id = static_cast<int>(inst.variables_.size());
    inst.s_var_[i] = id;
    inst.variables_.push_back({id, VarRole::kS, i});
  }
  const int z = static_cast<int>(inst.variables_.size());
  inst.variables_.push_back({z, VarRole::kZ, -1});

  auto& cs = inst.constraints_;
  cs.push_back({ConstraintKind::kFixZero, {z}, 1, Origin::kDummy, 0});
  for (int i = 0; i < k; ++i) {
    cs.push_back({ConstraintKind::kLinearBinding,
                  {inst.u_var(i), inst.v_var(i), inst.d_var(i)},
                  -1,
                  Origin::kDifferenceBinding,
                  i});
  }
  for (int i = 0; i < k; ++i) {
    if (!weak[i]) continue;
    cs.push_back({ConstraintKind::kLinearBinding,
                  {inst.u_var(i), inst.v_var(i), inst.s_var_[i]},
                  1,
                  Origin::kSumBinding,
                  i});
  }
  for (int row = 1; row <= q; ++row) {
    cs.push_back({ConstraintKind::kAllDifferent,
                  {inst.d_var(3 * row - 2), inst.d_var(3 * row - 1),
                   inst.d_var(3 * row)},
                  1,
                  Origin::kRow,
                  row});
  }
  for (const WeakSet& w : weak_sets) {
    Constraint c{ConstraintKind::kAllDifferent, {}, 1,
                 w.sum == 0 ? Origin::kZeroWeakSet : Origin::kWeakSet, w.sum};
    for (int i : w.members) c.vars.push_back(inst.s_var_[i]);
    if (w.sum == 0) c.vars.push_back(z);
    cs.push_back(std::move(c));
  }
  const MonochromeSets colors = ComputeMonochromeSets(table);
  for (const MonochromeSet& m : colors.sets) {
    Constraint c{ConstraintKind::kAllDifferent, {}, 1, Origin::kColor, m.color};
    for (const Position& pos : m.positions) {
      if (pos.is_dummy()) {
        c.vars.push_back(z);
      } else {
        c.vars.push_back(pos.slot == 0 ? inst.u_var(pos.pair_index)
                                       : inst.v_var(pos.pair_index));
      }
    }
    cs.push_back(std::move(c));
  }

  for (const Constraint& c : cs) {
    if (c.kind == ConstraintKind::kAllDifferent && c.vars.size() > 3) {
      inst.trivially_unsat_ = c.Describe() + " requires " +
                              std::to_string(c.vars.size()) +
                              " distinct values mod 3";
      break;
    }
  }
  return inst;
}

namespace {

bool Holds(const Constraint& c, const std::vector<std::uint8_t>& x) {
  switch (c.kind) {
    case ConstraintKind::kFixZero:
      return x[c.vars[0]] == 0;
    case ConstraintKind::kLinearBinding:
      return Mod(x[c.vars[0]] + c.sign * x[c.vars[1]] - x[c.vars[2]], 3) == 0;
    case ConstraintKind::kAllDifferent: {
      unsigned seen = 0;
      for (int v : c.vars) {
        const unsigned bit = 1u << x[v];
        if (seen & bit) return false;
        seen |= bit;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

CheckResult CheckSolution(const SudokuInstance& instance,
                          const SudokuSolution& candidate) {
  if (candidate.values.size() != instance.num_variables()) {
    throw StructuralError("assignment covers " +
                          std::to_string(candidate.values.size()) + " of " +
                          std::to_string(instance.num_variables()) +
                          " variables");
  }
  for (std::size_t v = 0; v < candidate.values.size(); ++v) {
    if (candidate.values[v] > 2) {
      throw StructuralError("variable " + instance.variables()[v].Name() +
                            " has value " +
                            std::to_string(candidate.values[v]));
    }
  }
  CheckResult result;
  const auto constraints = instance.constraints();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (!Holds(constraints[i], candidate.values)) result.violated.push_back(i);
  }
  result.ok = result.violated.empty();
  return result;
}

SudokuSolution ApplyPhi(const SudokuSolution& candidate) {
  SudokuSolution out = candidate;
  for (std::uint8_t& v : out.values) v = static_cast<std::uint8_t>((3 - v) % 3);
  return out;
}

SudokuSolution CompleteFromUV(const SudokuInstance& instance,
                              std::span<const OrderedPair> uv) {
  if (uv.size() != instance.num_pairs()) {
    throw StructuralError("expected " + std::to_string(instance.num_pairs()) +
                          " (U, V) pairs, got " + std::to_string(uv.size()));
  }
  SudokuSolution sol;
  sol.values.assign(instance.num_variables(), 0);
  for (int i = 0; i < static_cast<int>(uv.size()); ++i) {
    const int u = uv[i].first;
    const int v = uv[i].second;
    if (u < 0 || u > 2 || v < 0 || v > 2) {
      throw StructuralError("pair " + std::to_string(i) +
                            " has a value outside {0, 1, 2}");
    }
    sol.values[instance.u_var(i)] = static_cast<std::uint8_t>(u);
    sol.values[instance.v_var(i)] = static_cast<std::uint8_t>(v);
    sol.values[instance.d_var(i)] = static_cast<std::uint8_t>(Mod(u - v, 3));
    if (instance.s_var(i) >= 0) {
      sol.values[instance.s_var(i)] = static_cast<std::uint8_t>((u + v) % 3);
    }
  }
  sol.values[instance.z_var()] = 0;
  return sol;
}

std::vector<OrderedPair> ExtractUV(const SudokuInstance& instance,
                                   const SudokuSolution& solution) {
  std::vector<OrderedPair> out;
  out.reserve(instance.num_pairs());
  for (int i = 0; i < static_cast<int>(instance.num_pairs()); ++i) {
    out.push_back({solution.values[instance.u_var(i)],
                   solution.values[instance.v_var(i)]});
  }
  return out;
}

}  // namespace starters
