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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordfa/dfa.hpp"
#include "ordfa/word.hpp"

namespace ordfa {

/// Exactly one of these holds for any pair of words.
enum class LexRelation {
  kEqual,
  kPrefixLess,     // u is a proper prefix of v
  kPrefixGreater,  // v is a proper prefix of u
  kStrictLess,     // first difference has u=0, v=1
  kStrictGreater,
};

LexRelation compare_lex(const Word& u, const Word& v);

/// u <_l v (prefix-less or strictly-less).
inline bool lex_less(const Word& u, const Word& v) {
  auto r = compare_lex(u, v);
  return r == LexRelation::kPrefixLess || r == LexRelation::kStrictLess;
}
inline bool strict_less(const Word& u, const Word& v) {
  return compare_lex(u, v) == LexRelation::kStrictLess;
}

const char* relation_name(LexRelation r) noexcept;

/// Least word of L(q) under <_l, or nullopt when L(q) is empty.
/// Throws kNoMinimum when the greedy descent cycles, which proves that L(q)
/// contains an infinite descending chain.
std::optional<Word> min_word_from(const Dfa& m, const std::vector<char>& live, State q);
std::optional<Word> min_word(const Dfa& m);

/// Least accepted word strictly greater than w. `w` need not be accepted.
std::optional<Word> successor(const Dfa& m, const Word& w);

/// The n least words of L(M). Requires L(M) to be well-ordered.
std::vector<Word> enumerate(const Dfa& m, std::size_t n);

/// Order embedding of ternary words (0<1<2) into binary words:
/// 0 -> 0, 1 -> 10, 2 -> 11. Throws kInvalidArgument on other letters.
Word embed3to2(std::string_view ternary);

/// Refines a <_l-descending list into a <_s-descending subsequence starting
/// at ws[0], keeping the earliest later word strictly below the last kept one.
/// Throws kNotDescending if some word is not <_l the last kept word.
std::vector<Word> extract_strict_chain(const std::vector<Word>& ws);

struct ActivePosition {
  std::size_t position;  // 0-based
  std::size_t time;      // 1-based: the pair (w_time, w_time+1)
  friend bool operator==(const ActivePosition&, const ActivePosition&) = default;
};

struct ChainAnalysis {
  std::vector<ActivePosition> active;    // ordered by time
  std::vector<ActivePosition> sequence;  // (i_k, t_k), k = 0, 1, ...
};

/// Active positions and the (i_k, t_k) sequence of a <_s-descending chain,
/// as far as the finite prefix determines them. When a position is active at
/// several qualifying times in the window the earliest is taken.
ChainAnalysis analyze_chain(const std::vector<Word>& ws);

}  // namespace ordfa
