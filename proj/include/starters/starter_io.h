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

#ifndef STARTERS_STARTER_IO_H_
#define STARTERS_STARTER_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "starters/pairing.h"

namespace starters {

// Starter files come in two forms.
//
// JSON, one object per starter, either alone or inside a top-level array:
//   {"order": 7, "pairs": [[2,3],[4,6],[1,5]]}
//
// Plain text, a header line then one pair per line; blank lines and lines
// starting with '#' are ignored:
//   order 7
//   2 3
//   4 6
//   1 5
//
// All parsers throw StructuralError with a "line N:" prefix on malformed
// input, including length and range violations.

std::vector<Pairing> ParseStartersJson(std::string_view text);
Pairing ParseStarterJson(std::string_view text);  // exactly one starter
Pairing ParseStarterText(std::string_view text);

std::string ToJson(const Pairing& pairing);
std::string ToText(const Pairing& pairing);

// Dispatches on the first non-blank character: '{' or '[' selects JSON.
Pairing ParseStarter(std::string_view text);

Pairing LoadStarterFile(const std::filesystem::path& path);
void SaveStarterFile(const std::filesystem::path& path, const Pairing& pairing);

}  // namespace starters

#endif  // STARTERS_STARTER_IO_H_
