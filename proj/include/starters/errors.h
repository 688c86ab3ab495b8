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

#ifndef STARTERS_ERRORS_H_
#define STARTERS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace starters {

// Malformed input: wrong pairing length, out-of-range residue, unparsable
// file. Distinct from a well-formed object that merely fails a property.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that an operation declines to process (order outside the
// supported range, inadmissible key without force, exhausted budget).
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A postcondition that holds by construction was observed to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace starters

#endif  // STARTERS_ERRORS_H_
