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

#include "ordfa/lexorder.hpp"

#include <algorithm>

#include "ordfa/error.hpp"

namespace ordfa {

LexRelation compare_lex(const Word& u, const Word& v) {
  const std::size_t common = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (u[i] != v[i]) {
      return u[i] == 0 ? LexRelation::kStrictLess : LexRelation::kStrictGreater;
    }
  }
  if (u.size() == v.size()) return LexRelation::kEqual;
  return u.size() < v.size() ? LexRelation::kPrefixLess : LexRelation::kPrefixGreater;
}

const char* relation_name(LexRelation r) noexcept {
  switch (r) {
    case LexRelation::kEqual: return "Equal";
    case LexRelation::kPrefixLess: return "PrefixLess";
    case LexRelation::kPrefixGreater: return "PrefixGreater";
    case LexRelation::kStrictLess: return "StrictLess";
    case LexRelation::kStrictGreater: return "StrictGreater";
  }
  return "?";
}

std::optional<Word> min_word_from(const Dfa& m, const std::vector<char>& live, State q) {
  if (!live[q]) return std::nullopt;
  std::vector<char> visited(m.state_count(), 0);
  Word w;
  while (!m.is_final(q)) {
    if (visited[q]) {
      throw Error(ErrorCode::kNoMinimum,
                  "no least word: greedy descent revisits state " + std::to_string(q) +
                      " after prefix " + w.display());
    }
    visited[q] = 1;
    Letter b = live[m.next(q, 0)] ? 0 : 1;
    w.push_back(b);
    q = m.next(q, b);
  }
  return w;
}

std::optional<Word> min_word(const Dfa& m) {
  return min_word_from(m, live_states(m), m.start());
}

namespace {

// Least nonempty word of L(q).
std::optional<Word> min_nonempty_from(const Dfa& m, const std::vector<char>& live,
                                      State q) {
  for (Letter b : {0, 1}) {
    if (auto rest = min_word_from(m, live, m.next(q, b))) {
      return word_from_letter(b) + *rest;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> successor(const Dfa& m, const Word& w) {
  const auto live = live_states(m);
  // States along w: path[i] = start.w[0..i-1].
  std::vector<State> path{m.start()};
  for (std::size_t i = 0; i < w.size(); ++i) path.push_back(m.next(path.back(), w[i]));

  if (auto ext = min_nonempty_from(m, live, path.back())) return w + *ext;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) continue;
    if (auto rest = min_word_from(m, live, m.next(path[i], 1))) {
      Word out = w.prefix(i);
      out.push_back(1);
      return out + *rest;
    }
  }
  return std::nullopt;
}

std::vector<Word> enumerate(const Dfa& m, std::size_t n) {
  std::vector<Word> out;
  if (n == 0) return out;
  auto w = min_word(m);
  while (w && out.size() < n) {
    out.push_back(*w);
    if (out.size() == n) break;
    w = successor(m, *w);
  }
  return out;
}

Word embed3to2(std::string_view ternary) {
  Word out;
  for (std::size_t i = 0; i < ternary.size(); ++i) {
    switch (ternary[i]) {
      case '0': out.push_back(0); break;
      case '1': out.push_back(1); out.push_back(0); break;
      case '2': out.push_back(1); out.push_back(1); break;
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    "invalid ternary letter '" + std::string(1, ternary[i]) +
                        "' at position " + std::to_string(i));
    }
  }
  return out;
}

std::vector<Word> extract_strict_chain(const std::vector<Word>& ws) {
  std::vector<Word> out;
  if (ws.empty()) return out;
  // Each word only has to lie below the last kept one. Consecutive descent
  // implies this, and it also admits inputs such as 010, 01, 0, 001 where a
  // strict drop follows a run of prefixes.
  std::size_t kept = 0;
  out.push_back(ws[0]);
  for (std::size_t k = 1; k < ws.size(); ++k) {
    const LexRelation r = compare_lex(ws[k], ws[kept]);
    if (r == LexRelation::kStrictLess) {
      out.push_back(ws[k]);
      kept = k;
    } else if (r != LexRelation::kPrefixLess) {
      throw Error(ErrorCode::kNotDescending,
                  "word " + std::to_string(k) + " (" + ws[k].display() +
                      ") is not below word " + std::to_string(kept) + " (" +
                      ws[kept].display() + ")");
    }
  }
  return out;
}

ChainAnalysis analyze_chain(const std::vector<Word>& ws) {
  ChainAnalysis out;
  for (std::size_t k = 0; k + 1 < ws.size(); ++k) {
    const Word& hi = ws[k];
    const Word& lo = ws[k + 1];
    if (!strict_less(lo, hi)) {
      throw Error(ErrorCode::kNotStrictChain,
                  "word " + std::to_string(k + 2) + " (" + lo.display() +
                      ") is not strictly below word " + std::to_string(k + 1) + " (" +
                      hi.display() + ")");
    }
    std::size_t i = 0;
    while (hi[i] == lo[i]) ++i;
    out.active.push_back({i, k + 1});
  }

  // i_0 is the least active position overall; each later i_{k+1} is the least
  // position above i_k that is active after t_k.
  std::optional<ActivePosition> last;
  for (;;) {
    std::optional<ActivePosition> best;
    for (const auto& a : out.active) {
      if (last && (a.time <= last->time || a.position <= last->position)) continue;
      if (!best || a.position < best->position) best = a;
    }
    if (!best) break;
    out.sequence.push_back(*best);
    last = best;
  }
  return out;
}

}  // namespace ordfa
