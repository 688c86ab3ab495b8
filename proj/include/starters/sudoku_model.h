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

#ifndef STARTERS_SUDOKU_MODEL_H_
#define STARTERS_SUDOKU_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starters/pairing.h"
#include "starters/triplication.h"

namespace starters {

enum class VarRole { kU, kV, kD, kS, kZ };

struct TernaryVariable {
  int id = 0;
  VarRole role = VarRole::kU;
  int index = -1;  // extension index; -1 for Z

  std::string Name() const;
};

enum class ConstraintKind { kFixZero, kLinearBinding, kAllDifferent };

// Which part of the table a constraint was derived from.
enum class Origin {
  kDummy,              // Z = 0
  kDifferenceBinding,  // D_i = U_i - V_i, index = i
  kSumBinding,         // S_i = U_i + V_i, index = i
  kRow,                // distinct D in regular row, index = row
  kWeakSet,            // distinct S in W_s, s != 0, index = s
  kZeroWeakSet,        // distinct nonzero S in W_0, index = 0
  kColor,              // distinct values over M_c, index = c
};

struct Constraint {
  ConstraintKind kind = ConstraintKind::kFixZero;
  // kFixZero: {z}. kLinearBinding: {a, b, c} with a + sign*b - c = 0 (mod 3).
  // kAllDifferent: the variables that must take pairwise distinct values.
  std::vector<int> vars;
  int sign = 1;
  Origin origin = Origin::kDummy;
  int origin_index = 0;

  std::string Describe() const;
};

// Ternary unknowns and constraints derived from one triplication table.
//
// Variable ids: U_i = 2i and V_i = 2i+1 for i in [0, 3q], then D_0..D_3q,
// then S_i for weak indices in ascending order, then Z.
class SudokuInstance {
 public:
  const TriplicationTable& table() const { return table_; }
  std::span<const TernaryVariable> variables() const { return variables_; }
  std::span<const Constraint> constraints() const { return constraints_; }
  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_pairs() const { return table_.size(); }

  int u_var(int i) const { return 2 * i; }
  int v_var(int i) const { return 2 * i + 1; }
  int d_var(int i) const { return static_cast<int>(2 * num_pairs()) + i; }
  // -1 when pair i is strong (no S variable).
  int s_var(int i) const { return s_var_[i]; }
  int z_var() const { return static_cast<int>(variables_.size()) - 1; }

  // Set when some AllDifferent constraint spans more than three variables,
  // which no ternary assignment can satisfy.
  const std::optional<std::string>& trivially_unsat() const {
    return trivially_unsat_;
  }

 private:
  friend SudokuInstance Encode(const TriplicationTable& table);
  explicit SudokuInstance(TriplicationTable table) : table_(std::move(table)) {}

  TriplicationTable table_;
  std::vector<TernaryVariable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<int> s_var_;
  std::optional<std::string> trivially_unsat_;
};

SudokuInstance Encode(const TriplicationTable& table);

// Total assignment of values in {0, 1, 2}, indexed by variable id.
struct SudokuSolution {
  std::vector<std::uint8_t> values;

  friend auto operator<=>(const SudokuSolution&,
                          const SudokuSolution&) = default;
};

struct CheckResult {
  bool ok = false;
  std::vector<std::size_t> violated;  // indices into instance.constraints()
};

// Throws StructuralError if the candidate is not a total assignment over the
// instance's variables with values in {0, 1, 2}.
CheckResult CheckSolution(const SudokuInstance& instance,
                          const SudokuSolution& candidate);

// Maps every value by 0->0, 1->2, 2->1 (negation mod 3).
SudokuSolution ApplyPhi(const SudokuSolution& candidate);

// Builds the total assignment induced by (U_i, V_i): D and S from the
// bindings, Z = 0. Throws StructuralError on a length mismatch.
SudokuSolution CompleteFromUV(const SudokuInstance& instance,
                              std::span<const OrderedPair> uv);

// The (U_i, V_i) part of an assignment.
std::vector<OrderedPair> ExtractUV(const SudokuInstance& instance,
                                   const SudokuSolution& solution);

}  // namespace starters

#endif  // STARTERS_SUDOKU_MODEL_H_
