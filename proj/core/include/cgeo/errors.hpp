// Copyright 2026 The Authors.
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

#ifndef CGEO_ERRORS_HPP_
#define CGEO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cgeo {

// Two values built over different ground sets were combined.
class GroundMismatchError : public std::invalid_argument {
 public:
  explicit GroundMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

// An enumeration guard refused an input that is too large for exhaustive
// work. The guard thresholds are documented on the operations that carry
// them; they bound the artifact to desk scale, the math itself has none.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// An input document does not match the exchange grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Two routes that must agree by a proved equivalence disagreed, or a
// checked construction produced an object outside its contract. Seeing
// this exception means a bug in this library, never bad user input.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace cgeo

#endif  // CGEO_ERRORS_HPP_
