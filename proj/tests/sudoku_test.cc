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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "starters/dimacs.h"
#include "starters/enumerate.h"
#include "starters/errors.h"
#include "starters/hill_climb.h"
#include "starters/sudoku_model.h"
#include "starters/sudoku_solver.h"
#include "starters/triplication.h"

namespace starters {
namespace {

using ::testing::HasSubstr;

SudokuInstance DemoInstance(int key = 1) {
  return Encode(TriplicationTable::Build(fixtures::T7(), key));
}

oracle::Pairs ExtensionOf(const SudokuInstance& inst) {
  return {inst.table().extension().begin(), inst.table().extension().end()};
}

std::map<std::pair<ConstraintKind, Origin>, int> Census(
    const SudokuInstance& inst) {
  std::map<std::pair<ConstraintKind, Origin>, int> out;
  for (const Constraint& c : inst.constraints()) ++out[{c.kind, c.origin}];
  return out;
}

// Every (U, V) tuple that differs from `uv` in exactly one entry.
std::vector<oracle::Pairs> Neighbors(const oracle::Pairs& uv) {
  std::vector<oracle::Pairs> out;
  for (std::size_t i = 0; i < uv.size(); ++i) {
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        if (u == uv[i].first && v == uv[i].second) continue;
        oracle::Pairs next = uv;
        next[i] = {u, v};
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

TEST(EncodeTest, DemoCensus) {
  const SudokuInstance inst = DemoInstance();
  EXPECT_EQ(inst.num_variables(), 38u);
  std::map<VarRole, int> roles;
  for (const TernaryVariable& v : inst.variables()) ++roles[v.role];
  EXPECT_EQ(roles[VarRole::kU], 10);
  EXPECT_EQ(roles[VarRole::kV], 10);
  EXPECT_EQ(roles[VarRole::kD], 10);
  EXPECT_EQ(roles[VarRole::kS], 7);
  EXPECT_EQ(roles[VarRole::kZ], 1);

  auto census = Census(inst);
  using K = ConstraintKind;
  EXPECT_EQ((census[{K::kFixZero, Origin::kDummy}]), 1);
  EXPECT_EQ((census[{K::kLinearBinding, Origin::kDifferenceBinding}]), 10);
  EXPECT_EQ((census[{K::kLinearBinding, Origin::kSumBinding}]), 7);
  EXPECT_EQ((census[{K::kAllDifferent, Origin::kRow}]), 3);
  EXPECT_EQ((census[{K::kAllDifferent, Origin::kZeroWeakSet}]), 1);
  EXPECT_EQ((census[{K::kAllDifferent, Origin::kWeakSet}]), 3);
  EXPECT_EQ((census[{K::kAllDifferent, Origin::kColor}]), 7);
  EXPECT_EQ(inst.constraints().size(), 32u);
  EXPECT_FALSE(inst.trivially_unsat().has_value());
}

TEST(EncodeTest, VariableLayout) {
  const SudokuInstance inst = DemoInstance();
  EXPECT_EQ(inst.u_var(3), 6);
  EXPECT_EQ(inst.v_var(3), 7);
  EXPECT_EQ(inst.d_var(0), 20);
  EXPECT_EQ(inst.s_var(0), -1);  // (1,1) sums to 2, not weak
  EXPECT_GE(inst.s_var(2), 30);
  EXPECT_EQ(inst.z_var(), 37);
  EXPECT_EQ(inst.variables()[inst.z_var()].role, VarRole::kZ);
}

TEST(EncodeTest, ZeroSumAndColorZeroIncludeDummy) {
  const SudokuInstance inst = DemoInstance();
  for (const Constraint& c : inst.constraints()) {
    if (c.origin == Origin::kZeroWeakSet ||
        (c.origin == Origin::kColor && c.origin_index == 0)) {
      EXPECT_EQ(c.vars.back(), inst.z_var());
    }
    if (c.origin == Origin::kZeroWeakSet) {
      // W_0 = {2}: the constraint reads S_2 != 0.
      EXPECT_EQ(c.vars.size(), 2u);
      EXPECT_EQ(c.vars.front(), inst.s_var(2));
    }
  }
}

TEST(EncodeTest, CensusFormulaForStrongBases) {
  for (int p : {7, 11, 13, 17, 19}) {
    const Pairing base = HillClimb(p, 2);
    for (int key = 0; key < p; ++key) {
      const TriplicationTable table = TriplicationTable::Build(base, key);
      const SudokuInstance inst = Encode(table);
      const int q = (p - 1) / 2;
      int weak_indices = 0;
      int nonzero_sets = 0;
      int zero_sets = 0;
      for (const WeakSet& w : ComputeWeakSets(table)) {
        weak_indices += w.type();
        (w.sum == 0 ? zero_sets : nonzero_sets)++;
      }
      auto census = Census(inst);
      using K = ConstraintKind;
      ASSERT_EQ((census[{K::kLinearBinding, Origin::kDifferenceBinding}]),
                3 * q + 1);
      ASSERT_EQ((census[{K::kLinearBinding, Origin::kSumBinding}]),
                weak_indices);
      ASSERT_EQ((census[{K::kAllDifferent, Origin::kRow}]), q);
      ASSERT_EQ((census[{K::kAllDifferent, Origin::kWeakSet}]), nonzero_sets);
      ASSERT_EQ((census[{K::kAllDifferent, Origin::kZeroWeakSet}]), zero_sets);
      ASSERT_EQ((census[{K::kAllDifferent, Origin::kColor}]), p);
      ASSERT_EQ(inst.num_variables(),
                static_cast<std::size_t>(3 * (3 * q + 1) + weak_indices + 1));
    }
  }
}

TEST(EncodeTest, OversizeWeakSetIsFlagged) {
  const SudokuInstance inst = Encode(TriplicationTable::Build(fixtures::T13(), 3));
  ASSERT_TRUE(inst.trivially_unsat().has_value());
  EXPECT_THAT(*inst.trivially_unsat(), HasSubstr("4"));
}

TEST(CheckSolutionTest, KnownSolutions) {
  const SudokuInstance demo = DemoInstance();
  EXPECT_TRUE(CheckSolution(demo, CompleteFromUV(demo, fixtures::DemoSigma3())).ok);

  const SudokuInstance worked = DemoInstance(4);
  EXPECT_TRUE(CheckSolution(worked, CompleteFromUV(worked, fixtures::S21Mod3())).ok);
  EXPECT_TRUE(
      CheckSolution(worked, CompleteFromUV(worked, fixtures::S21AltMod3())).ok);
}

TEST(CheckSolutionTest, AllZeroViolatesColorZero) {
  const SudokuInstance inst = DemoInstance();
  const CheckResult r = CheckSolution(inst, CompleteFromUV(inst, oracle::Pairs(10)));
  EXPECT_FALSE(r.ok);
  bool color_zero = false;
  for (std::size_t k : r.violated) {
    const Constraint& c = inst.constraints()[k];
    color_zero |= c.origin == Origin::kColor && c.origin_index == 0;
  }
  EXPECT_TRUE(color_zero);
}

TEST(CheckSolutionTest, BindingsAreChecked) {
  const SudokuInstance inst = DemoInstance();
  SudokuSolution s = CompleteFromUV(inst, fixtures::DemoSigma3());
  s.values[inst.d_var(4)] = (s.values[inst.d_var(4)] + 1) % 3;
  EXPECT_FALSE(CheckSolution(inst, s).ok);
  s = CompleteFromUV(inst, fixtures::DemoSigma3());
  s.values[inst.z_var()] = 1;
  EXPECT_FALSE(CheckSolution(inst, s).ok);
}

TEST(CheckSolutionTest, MalformedCandidates) {
  const SudokuInstance inst = DemoInstance();
  SudokuSolution s = CompleteFromUV(inst, fixtures::DemoSigma3());
  s.values.pop_back();
  EXPECT_THROW(CheckSolution(inst, s), StructuralError);
  s = CompleteFromUV(inst, fixtures::DemoSigma3());
  s.values[0] = 3;
  EXPECT_THROW(CheckSolution(inst, s), StructuralError);
  EXPECT_THROW(CompleteFromUV(inst, oracle::Pairs(9)), StructuralError);
}

TEST(PhiTest, MapsAndIsInvolution) {
  const SudokuInstance inst = DemoInstance();
  const SudokuSolution s = CompleteFromUV(inst, fixtures::DemoSigma3());
  const SudokuSolution phi = ApplyPhi(s);
  EXPECT_EQ(ExtractUV(inst, phi).front(), (OrderedPair{2, 1}));
  EXPECT_EQ(phi.values[inst.z_var()], 0);
  EXPECT_EQ(ApplyPhi(phi), s);
  const SudokuSolution zeros{std::vector<std::uint8_t>(38, 0)};
  EXPECT_EQ(ApplyPhi(zeros), zeros);
  EXPECT_TRUE(CheckSolution(inst, phi).ok);
}

// The encoder agrees with conditions read straight off the table, and those
// agree with merging and checking the definition of a strong starter.
TEST(FaithfulnessTest, EncoderMatchesTableReading) {
  for (int key : {1, 2, 4, 3, 0}) {
    const SudokuInstance inst = DemoInstance(key);
    const oracle::Pairs ext = ExtensionOf(inst);
    std::vector<oracle::Pairs> probes =
        oracle::SolveTable(ext, 7, /*cap=*/20);
    const std::size_t positives = probes.size();
    for (std::size_t k = 0; k < positives; ++k) {
      for (oracle::Pairs& n : Neighbors(probes[k])) probes.push_back(n);
    }
    std::mt19937 rng(key);
    for (int k = 0; k < 200; ++k) {
      oracle::Pairs uv(ext.size());
      for (OrderedPair& pr : uv) pr = {int(rng() % 3), int(rng() % 3)};
      probes.push_back(uv);
    }
    for (const oracle::Pairs& uv : probes) {
      const bool by_table = oracle::SatisfiesTable(ext, 7, uv);
      ASSERT_EQ(CheckSolution(inst, CompleteFromUV(inst, uv)).ok, by_table);
      ASSERT_EQ(oracle::IsStrong(21, oracle::Merge(ext, 7, uv)), by_table);
    }
  }
}

TEST(SolverTest, DemoIsSat) {
  const SudokuInstance inst = DemoInstance();
  const SolveOutcome r = Solve(inst);
  ASSERT_EQ(r.status, SolveStatus::kSat);
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_TRUE(CheckSolution(inst, *r.solution).ok);
  EXPECT_GT(r.stats.decisions, 0u);
}

TEST(SolverTest, InadmissibleAndOversizeAreUnsat) {
  for (int key : {0, 3, 5, 6}) {
    EXPECT_EQ(Solve(DemoInstance(key)).status, SolveStatus::kUnsat) << key;
  }
  const SudokuInstance t13 = Encode(TriplicationTable::Build(fixtures::T13(), 3));
  EXPECT_EQ(Solve(t13).status, SolveStatus::kUnsat);
}

TEST(SolverTest, EnumerationMatchesOracleAndIsPhiClosed) {
  const SudokuInstance inst = DemoInstance();
  const SolutionEnumeration e = EnumerateSolutions(inst, 1'000'000);
  ASSERT_TRUE(e.complete);
  EXPECT_FALSE(e.budget_exhausted);
  std::set<SudokuSolution> set(e.solutions.begin(), e.solutions.end());
  EXPECT_EQ(set.size(), e.solutions.size());
  EXPECT_EQ(e.solutions.size() % 2, 0u);
  for (const SudokuSolution& s : e.solutions) {
    EXPECT_TRUE(CheckSolution(inst, s).ok);
    EXPECT_TRUE(set.count(ApplyPhi(s)));
    EXPECT_NE(ApplyPhi(s), s);
  }
  std::set<oracle::Pairs> expected;
  for (const oracle::Pairs& uv : oracle::SolveTable(ExtensionOf(inst), 7)) {
    expected.insert(uv);
  }
  std::set<oracle::Pairs> actual;
  for (const SudokuSolution& s : e.solutions) actual.insert(ExtractUV(inst, s));
  EXPECT_EQ(actual, expected);
}

TEST(SolverTest, CapAndEmptyEnumeration) {
  const SolutionEnumeration one = EnumerateSolutions(DemoInstance(), 1);
  ASSERT_EQ(one.solutions.size(), 1u);
  EXPECT_FALSE(one.complete);
  const SolutionEnumeration none = EnumerateSolutions(DemoInstance(0), 10);
  EXPECT_TRUE(none.solutions.empty());
  EXPECT_TRUE(none.complete);
}

// Every ordered, oriented strong starter of order 7 and every key.
TEST(SolverTest, StatusMatchesOracleOnAllOrderSevenInstances) {
  EnumerationOptions options;
  options.list_cap = 100;
  int instances = 0;
  for (const Pairing& s : EnumerateStrongStarters(7, options).starters) {
    std::vector<OrderedPair> pairs(s.pairs().begin(), s.pairs().end());
    std::sort(pairs.begin(), pairs.end());
    do {
      for (int flips = 0; flips < 8; ++flips) {
        std::vector<OrderedPair> oriented = pairs;
        for (int i = 0; i < 3; ++i) {
          if (flips >> i & 1) std::swap(oriented[i].first, oriented[i].second);
        }
        const Pairing base(7, oriented);
        for (int key = 0; key < 7; ++key) {
          const TriplicationTable table = TriplicationTable::Build(base, key);
          const oracle::Pairs ext(table.extension().begin(),
                                  table.extension().end());
          const bool oracle_sat = !oracle::SolveTable(ext, 7, 1).empty();
          const SolveOutcome r = Solve(Encode(table));
          ASSERT_EQ(r.status == SolveStatus::kSat, oracle_sat)
              << base.ToString() << " key " << key;
          ASSERT_NE(r.status, SolveStatus::kBudgetExhausted);
          ++instances;
        }
      }
    } while (std::next_permutation(pairs.begin(), pairs.end()));
  }
  EXPECT_GT(instances, 0);
}

TEST(SolverTest, StatusMatchesOracleOnOrderElevenAndThirteen) {
  for (int p : {11, 13}) {
    const Pairing base = HillClimb(p, 4);
    for (int key = 0; key < p; ++key) {
      const TriplicationTable table = TriplicationTable::Build(base, key);
      const oracle::Pairs ext(table.extension().begin(),
                              table.extension().end());
      const bool oracle_sat = !oracle::SolveTable(ext, p, 1).empty();
      EXPECT_EQ(Solve(Encode(table)).status == SolveStatus::kSat, oracle_sat)
          << "p=" << p << " key=" << key;
    }
  }
}

TEST(SolverTest, VariableOrdersAgreeOnStatus) {
  for (int p : {11, 13}) {
    const Pairing base = HillClimb(p, 9);
    for (int key = 0; key < p; ++key) {
      const SudokuInstance inst = Encode(TriplicationTable::Build(base, key));
      const SolveStatus linear = Solve(inst).status;
      for (VariableOrder order :
           {VariableOrder::kRandom, VariableOrder::kMinDomain}) {
        const SolveOutcome r = Solve(inst, {.variable_order = order, .seed = 5});
        ASSERT_EQ(r.status, linear);
        if (r.solution) ASSERT_TRUE(CheckSolution(inst, *r.solution).ok);
      }
    }
  }
}

TEST(SolverTest, DeterministicStats) {
  const SudokuInstance inst = Encode(TriplicationTable::Build(HillClimb(23, 1),
                                                              AdmissibleKeys(HillClimb(23, 1)).front()));
  const SolveOutcome a = Solve(inst);
  const SolveOutcome b = Solve(inst);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.stats.decisions, b.stats.decisions);
  EXPECT_EQ(a.stats.backtracks, b.stats.backtracks);
  EXPECT_EQ(a.stats.propagations, b.stats.propagations);
}

TEST(SolverTest, BudgetIsNotUnsat) {
  const SudokuInstance inst = Encode(TriplicationTable::Build(HillClimb(31, 2), 0));
  const SolveOutcome r = Solve(inst, {.step_budget = 1});
  EXPECT_EQ(r.status, SolveStatus::kBudgetExhausted);
  EXPECT_EQ(ToString(r.status), "BUDGET");
  EXPECT_FALSE(r.solution.has_value());
}

TEST(DimacsTest, OneHotStructure) {
  const SudokuInstance inst = DemoInstance();
  const CnfDocument doc = ExportDimacs(inst);
  EXPECT_EQ(doc.num_ternary, 38);
  EXPECT_EQ(doc.num_booleans, 114);
  std::set<std::vector<int>> clauses;
  for (std::vector<int> c : doc.clauses) {
    std::sort(c.begin(), c.end());
    clauses.insert(c);
  }
  for (int x = 0; x < doc.num_ternary; ++x) {
    const int a = doc.Literal(x, 0), b = doc.Literal(x, 1), c = doc.Literal(x, 2);
    EXPECT_TRUE(clauses.count({a, b, c}));
    EXPECT_TRUE(clauses.count({-b, -a}));
    EXPECT_TRUE(clauses.count({-c, -a}));
    EXPECT_TRUE(clauses.count({-c, -b}));
  }
  EXPECT_TRUE(clauses.count({doc.Literal(inst.z_var(), 0)}));

  // 4 per variable, 1 unit, 18 per binding, 3 per pair per AllDifferent.
  std::size_t expected = 4 * 38 + 1;
  for (const Constraint& c : inst.constraints()) {
    if (c.kind == ConstraintKind::kLinearBinding) expected += 18;
    if (c.kind == ConstraintKind::kAllDifferent) {
      expected += 3 * c.vars.size() * (c.vars.size() - 1) / 2;
    }
  }
  EXPECT_EQ(doc.clauses.size(), expected);
}

TEST(DimacsTest, TextRoundTrip) {
  const CnfDocument doc = ExportDimacs(DemoInstance());
  const std::string text = ToDimacsText(doc);
  EXPECT_EQ(text.rfind("p cnf 114 ", 0), 0u);
  EXPECT_EQ(ParseDimacs("c comment\n" + text), doc);
  EXPECT_THROW(ParseDimacs("p cnf 3 1\n1 x 0\n"), StructuralError);
  EXPECT_THROW(ParseDimacs("1 2 0\n"), StructuralError);
}

std::vector<int> ModelOf(const CnfDocument& doc, const SudokuSolution& s) {
  std::vector<int> lits;
  for (int x = 0; x < doc.num_ternary; ++x) {
    for (int v = 0; v < 3; ++v) {
      lits.push_back(s.values[x] == v ? doc.Literal(x, v) : -doc.Literal(x, v));
    }
  }
  return lits;
}

TEST(DimacsTest, ClausesAgreeWithChecker) {
  const SudokuInstance inst = DemoInstance();
  const CnfDocument doc = ExportDimacs(inst);
  const oracle::Pairs good = fixtures::DemoSigma3();
  std::vector<oracle::Pairs> probes = Neighbors(good);
  probes.push_back(good);
  for (const oracle::Pairs& uv : probes) {
    const SudokuSolution s = CompleteFromUV(inst, uv);
    const std::vector<int> model = ModelOf(doc, s);
    ASSERT_EQ(SatisfiesCnf(doc, model), CheckSolution(inst, s).ok);
    ASSERT_EQ(ImportDimacsModel(doc, model), s);
  }
}

TEST(DimacsTest, ImportDecodesAndRejectsNonOneHot) {
  const CnfDocument doc = ExportDimacs(DemoInstance());
  const SudokuSolution s = CompleteFromUV(DemoInstance(), fixtures::DemoSigma3());
  std::vector<int> model = ModelOf(doc, s);
  // Variable 0 is U_0 = 1: pattern (F, T, F).
  EXPECT_EQ(model[0], -1);
  EXPECT_EQ(model[1], 2);
  EXPECT_EQ(model[2], -3);
  EXPECT_EQ(ImportDimacsModel(doc, model).values[0], 1);
  model[0] = 1;  // U_0 now has two values
  try {
    ImportDimacsModel(doc, model);
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_THAT(e.what(), HasSubstr("ternary variable 0"));
  }
}

TEST(DimacsTest, ParseSolverOutput) {
  ExternalSolverResult r =
      ParseSolverOutput("c hello\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n");
  EXPECT_EQ(r.status, SolveStatus::kSat);
  EXPECT_EQ(r.model, (std::vector<int>{1, -2, 3, -4}));
  EXPECT_EQ(ParseSolverOutput("s UNSATISFIABLE\n").status, SolveStatus::kUnsat);
  EXPECT_EQ(ParseSolverOutput("timeout\n").status,
            SolveStatus::kBudgetExhausted);
}

TEST(DimacsTest, SubprocessBridgeWithShellCommand) {
  const CnfDocument doc = ExportDimacs(DemoInstance(0));
  const ExternalSolverResult r = RunExternalSolver(
      doc, "grep -q '^p cnf' {cnf} && echo 's UNSATISFIABLE'");
  EXPECT_EQ(r.status, SolveStatus::kUnsat);
}

#ifdef STARTERS_Z3
TEST(DimacsTest, ExternalSolverAgreesWithNative) {
  const std::string command = std::string(STARTERS_Z3) + " -dimacs {cnf}";
  for (int key = 0; key < 7; ++key) {
    const SudokuInstance inst = DemoInstance(key);
    const CnfDocument doc = ExportDimacs(inst);
    const ExternalSolverResult r = RunExternalSolver(doc, command);
    ASSERT_EQ(r.status, Solve(inst).status) << "key " << key;
    if (r.status == SolveStatus::kSat) {
      EXPECT_TRUE(SatisfiesCnf(doc, r.model));
      EXPECT_TRUE(CheckSolution(inst, ImportDimacsModel(doc, r.model)).ok);
    }
  }
}
#endif

}  // namespace
}  // namespace starters
