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

#include "starters/starter_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "starters/errors.h"

namespace starters {
namespace {

using nlohmann::json;

int LineOfOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw StructuralError("line " + std::to_string(line) + ": " + what);
}

// Line of the n-th occurrence of `"order"`, which is the best anchor the DOM
// leaves us once parsing has succeeded.
int LineOfObject(std::string_view text, std::size_t index) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k <= index; ++k) {
    pos = text.find("\"order\"", k == 0 ? 0 : pos + 1);
    if (pos == std::string_view::npos) return 1;
  }
  return LineOfOffset(text, pos);
}

Pairing PairingFromJson(const json& obj, int line) {
  if (!obj.is_object()) Fail(line, "starter must be a JSON object");
  if (!obj.contains("order") || !obj["order"].is_number_integer()) {
    Fail(line, "missing integer field \"order\"");
  }
  if (!obj.contains("pairs") || !obj["pairs"].is_array()) {
    Fail(line, "missing array field \"pairs\"");
  }
  const int order = obj["order"].get<int>();
  std::vector<OrderedPair> pairs;
  for (const json& item : obj["pairs"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      Fail(line, "pair " + std::to_string(pairs.size()) +
                     " must be a two-element integer array");
    }
    pairs.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  try {
    return Pairing(order, std::move(pairs));
  } catch (const StructuralError& e) {
    Fail(line, e.what());
  }
}

}  // namespace

std::vector<Pairing> ParseStartersJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail(LineOfOffset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  std::vector<Pairing> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out.push_back(PairingFromJson(doc[i], LineOfObject(text, i)));
    }
  } else {
    out.push_back(PairingFromJson(doc, LineOfObject(text, 0)));
  }
  return out;
}

Pairing ParseStarterJson(std::string_view text) {
  std::vector<Pairing> all = ParseStartersJson(text);
  if (all.size() != 1) {
    Fail(1, "expected exactly one starter, found " +
                std::to_string(all.size()));
  }
  return std::move(all.front());
}

Pairing ParseStarterText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int order = -1;
  int header_line = 0;
  std::vector<OrderedPair> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    if (order < 0) {
      int value = 0;
      if (first != "order" || !(fields >> value)) {
        Fail(line_no, "expected header 'order <n>'");
      }
      order = value;
      header_line = line_no;
    } else {
      std::istringstream pair_fields(line);
      int a = 0, b = 0;
      std::string extra;
      if (!(pair_fields >> a >> b) || (pair_fields >> extra)) {
        Fail(line_no, "expected two integers 'a b'");
      }
      if (a < 0 || a >= order || b < 0 || b >= order) {
        Fail(line_no, "entry outside [0, " + std::to_string(order) + ")");
      }
      pairs.push_back({a, b});
    }
  }
  if (order < 0) Fail(line_no == 0 ? 1 : line_no, "missing 'order' header");
  try {
    return Pairing(order, std::move(pairs));
  } catch (const StructuralError& e) {
    Fail(header_line, e.what());
  }
}

std::string ToJson(const Pairing& pairing) {
  json pairs = json::array();
  for (const OrderedPair& pr : pairing.pairs()) {
    pairs.push_back({pr.first, pr.second});
  }
  json obj;
  obj["order"] = pairing.modulus();
  obj["pairs"] = std::move(pairs);
  return obj.dump() + "\n";
}

std::string ToText(const Pairing& pairing) {
  std::ostringstream out;
  out << "order " << pairing.modulus() << '\n';
  for (const OrderedPair& pr : pairing.pairs()) {
    out << pr.first << ' ' << pr.second << '\n';
  }
  return out.str();
}

Pairing ParseStarter(std::string_view text) {
  const std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && (text[pos] == '{' || text[pos] == '[')) {
    return ParseStarterJson(text);
  }
  return ParseStarterText(text);
}

Pairing LoadStarterFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseStarter(buffer.str());
  } catch (const StructuralError& e) {
    throw StructuralError(path.string() + ": " + e.what());
  }
}

void SaveStarterFile(const std::filesystem::path& path,
                     const Pairing& pairing) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path.string());
  out << (path.extension() == ".txt" ? ToText(pairing) : ToJson(pairing));
}

}  // namespace starters
