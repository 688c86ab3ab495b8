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

#include "starters/dimacs.h"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "starters/errors.h"

namespace starters {

CnfDocument ExportDimacs(const SudokuInstance& instance) {
  CnfDocument doc;
  doc.num_ternary = static_cast<int>(instance.num_variables());
  doc.num_booleans = 3 * doc.num_ternary;
  auto& cl = doc.clauses;
  for (int x = 0; x < doc.num_ternary; ++x) {
    cl.push_back({doc.Literal(x, 0), doc.Literal(x, 1), doc.Literal(x, 2)});
    cl.push_back({-doc.Literal(x, 0), -doc.Literal(x, 1)});
    cl.push_back({-doc.Literal(x, 0), -doc.Literal(x, 2)});
    cl.push_back({-doc.Literal(x, 1), -doc.Literal(x, 2)});
  }
  for (const Constraint& c : instance.constraints()) {
    switch (c.kind) {
      case ConstraintKind::kFixZero:
        cl.push_back({doc.Literal(c.vars[0], 0)});
        break;
      case ConstraintKind::kLinearBinding:
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            for (int r = 0; r < 3; ++r) {
              if (Mod(a + c.sign * b - r, 3) == 0) continue;
              cl.push_back({-doc.Literal(c.vars[0], a),
                            -doc.Literal(c.vars[1], b),
                            -doc.Literal(c.vars[2], r)});
            }
          }
        }
        break;
      case ConstraintKind::kAllDifferent:
        for (std::size_t i = 0; i < c.vars.size(); ++i) {
          for (std::size_t j = i + 1; j < c.vars.size(); ++j) {
            for (int v = 0; v < 3; ++v) {
              cl.push_back({-doc.Literal(c.vars[i], v),
                            -doc.Literal(c.vars[j], v)});
            }
          }
        }
        break;
    }
  }
  return doc;
}

std::string ToDimacsText(const CnfDocument& doc) {
  std::string out = "p cnf " + std::to_string(doc.num_booleans) + " " +
                    std::to_string(doc.clauses.size()) + "\n";
  for (const auto& clause : doc.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfDocument ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  CnfDocument doc;
  std::vector<int> current;
  auto fail = [&](const std::string& what) {
    throw StructuralError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first == "c") continue;
    if (first == "p") {
      std::string fmt;
      int vars = 0;
      long long clauses = 0;
      if (have_header || !(fields >> fmt >> vars >> clauses) || fmt != "cnf" ||
          vars < 0 || clauses < 0) {
        fail("malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      doc.num_booleans = vars;
      doc.num_ternary = vars / 3;
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) fail("clause before 'p cnf' header");
    std::istringstream lits(line);
    long long lit = 0;
    while (lits >> lit) {
      if (lit == 0) {
        doc.clauses.push_back(std::move(current));
        current.clear();
      } else if (lit < -doc.num_booleans || lit > doc.num_booleans) {
        fail("literal " + std::to_string(lit) + " out of range");
      } else {
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!lits.eof()) fail("non-integer token in clause");
  }
  if (!have_header) fail("missing 'p cnf' header");
  if (!current.empty()) fail("last clause is not terminated by 0");
  if (doc.clauses.size() != declared_clauses) {
    fail("header declares " + std::to_string(declared_clauses) +
         " clauses, found " + std::to_string(doc.clauses.size()));
  }
  return doc;
}

namespace {

std::vector<bool> Truth(int num_booleans, std::span<const int> literals) {
  std::vector<bool> truth(num_booleans + 1, false);
  for (int lit : literals) {
    if (lit > 0 && lit <= num_booleans) truth[lit] = true;
  }
  return truth;
}

}  // namespace

SudokuSolution ImportDimacsModel(const CnfDocument& doc,
                                 std::span<const int> literals) {
  const std::vector<bool> truth = Truth(doc.num_booleans, literals);
  SudokuSolution sol;
  sol.values.resize(doc.num_ternary);
  for (int x = 0; x < doc.num_ternary; ++x) {
    int value = -1;
    int set = 0;
    for (int v = 0; v < 3; ++v) {
      if (truth[doc.Literal(x, v)]) {
        value = v;
        ++set;
      }
    }
    if (set != 1) {
      throw StructuralError("ternary variable " + std::to_string(x) +
                            " is not one-hot (" + std::to_string(set) +
                            " literals true)");
    }
    sol.values[x] = static_cast<std::uint8_t>(value);
  }
  return sol;
}

bool SatisfiesCnf(const CnfDocument& doc, std::span<const int> literals) {
  const std::vector<bool> truth = Truth(doc.num_booleans, literals);
  for (const auto& clause : doc.clauses) {
    bool sat = false;
    for (int lit : clause) {
      if (truth[std::abs(lit)] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

ExternalSolverResult ParseSolverOutput(std::string_view output) {
  ExternalSolverResult result;
  result.raw_output = std::string(output);
  std::istringstream in{result.raw_output};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "s") {
      std::string status;
      fields >> status;
      if (status == "SATISFIABLE") result.status = SolveStatus::kSat;
      if (status == "UNSATISFIABLE") result.status = SolveStatus::kUnsat;
    } else if (tag == "v") {
      int lit = 0;
      while (fields >> lit) {
        if (lit != 0) result.model.push_back(lit);
      }
    }
  }
  return result;
}

namespace {
std::atomic<unsigned long> next_file_id{0};
}  // namespace

ExternalSolverResult RunExternalSolver(const CnfDocument& doc,
                                       const std::string& command_template) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() /
      ("starters_" + std::to_string(::getpid()) + "_" +
       std::to_string(next_file_id.fetch_add(1)) + ".cnf");
  {
    std::ofstream out(path);
    if (!out) throw Refusal("cannot write " + path.string());
    out << ToDimacsText(doc);
  }
  std::string command = command_template;
  const std::string placeholder = "{cnf}";
  if (command.find(placeholder) == std::string::npos) {
    command += " " + path.string();
  } else {
    for (std::size_t pos = command.find(placeholder); pos != std::string::npos;
         pos = command.find(placeholder, pos)) {
      command.replace(pos, placeholder.size(), path.string());
    }
  }
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    std::filesystem::remove(path);
    throw Refusal("cannot start external solver: " + command);
  }
  std::string output;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    output.append(buffer, n);
  }
  ::pclose(pipe);
  std::filesystem::remove(path);
  return ParseSolverOutput(output);
}

}  // namespace starters
