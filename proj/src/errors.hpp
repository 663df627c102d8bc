// Copyright 2026 The lmax-sched Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lmax {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text. `line`/`column` are 1-based; 0 means "no location"
/// (for errors about the instance as a whole, e.g. magnitude overflow).
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(format(line, column, msg)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& msg) {
    if (line <= 0) return msg;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + msg;
  }

  int line_;
  int column_;
};

/// Integer overflow or out-of-range argument values.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured cap (dp table bits, oracle
/// enumeration count). The message names the required amount.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (wrong machine shape,
/// malformed assignment, empty input where jobs are required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lmax
