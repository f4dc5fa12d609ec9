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

#include "ordfa/error.hpp"

namespace ordfa {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidDfa: return "InvalidDfa";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kMultipleSinks: return "MultipleSinks";
    case ErrorCode::kNotSimpleCycle: return "NotSimpleCycle";
    case ErrorCode::kNoMinimum: return "NoMinimum";
    case ErrorCode::kNotDescending: return "NotDescending";
    case ErrorCode::kNotStrictChain: return "NotStrictChain";
    case ErrorCode::kNotTrim: return "NotTrim";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kNotWellOrderedInput: return "NotWellOrderedInput";
    case ErrorCode::kEmptyLanguage: return "EmptyLanguage";
    case ErrorCode::kBoundTooLarge: return "BoundTooLarge";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace ordfa
