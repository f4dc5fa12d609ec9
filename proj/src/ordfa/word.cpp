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

#include "ordfa/word.hpp"

#include "ordfa/error.hpp"

namespace ordfa {

Word Word::parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw Error(ErrorCode::kInvalidArgument,
                  "invalid letter '" + std::string(1, text[i]) +
                      "' at position " + std::to_string(i) +
                      " (words are over 0/1)");
    }
  }
  return Word(std::string(text));
}

Word Word::power(std::size_t n) const {
  std::string out;
  out.reserve(letters_.size() * n);
  for (std::size_t i = 0; i < n; ++i) out += letters_;
  return Word(std::move(out));
}

Word word_from_letter(Letter b) {
  Word w;
  w.push_back(b);
  return w;
}

}  // namespace ordfa
