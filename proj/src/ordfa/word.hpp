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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace ordfa {

using Letter = int;  // 0 or 1

/// A finite word over {0,1}, stored as the characters '0' and '1'.
class Word {
 public:
  Word() = default;

  /// Throws Error(kInvalidArgument) on any character other than '0'/'1'.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i] - '0'; }

  /// The first `n` letters, i.e. w[0 ... n-1].
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }

  void push_back(Letter b) { letters_.push_back(b ? '1' : '0'); }
  Word& operator+=(const Word& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  /// `*this` repeated n times.
  Word power(std::size_t n) const;

  const std::string& str() const noexcept { return letters_; }
  /// Human-readable form: the empty word prints as "(eps)".
  std::string display() const { return letters_.empty() ? "(eps)" : letters_; }

  // Structural equality only. The lexicographic order lives in lexorder.hpp;
  // this ordering is the same one but exposed for use as a map key.
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

Word word_from_letter(Letter b);

}  // namespace ordfa
