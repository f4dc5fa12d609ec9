// Copyright 2026 The ordfa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ordfa {

// Numeric values are part of the C ABI (see ordfa.h); append only.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kInvalidDfa = 2,
  kParse = 3,
  kMultipleSinks = 4,
  kNotSimpleCycle = 5,
  kNoMinimum = 6,
  kNotDescending = 7,
  kNotStrictChain = 8,
  kNotTrim = 9,
  kDegreeOverflow = 10,
  kSyntax = 11,
  kNotWellOrderedInput = 12,
  kEmptyLanguage = 13,
  kBoundTooLarge = 14,
  kIo = 15,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a location; `position` is a 0-based byte offset for
// ordinal text and `line` a 1-based line for automaton files (0 if unknown).
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& what, std::size_t position,
              std::size_t line)
      : Error(code, what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

}  // namespace ordfa
