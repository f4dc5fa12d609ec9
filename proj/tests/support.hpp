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

// Fixtures and brute-force helpers shared by the unit tests. Nothing here
// calls into lexorder or wellorder, so tests can use these as references.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordfa/dfa.hpp"
#include "ordfa/word.hpp"

namespace ordfa::test {

// L = 1*. State 0 start and final, 1 is the sink.
inline Dfa onestar() {
  const State finals[] = {0};
  return Dfa(0, {{1, 0}, {1, 1}}, finals);
}

// q0=0, q1=1, f=2, sink=3; L = (01)*00.
inline Dfa cycle2() {
  const State finals[] = {2};
  return Dfa(0, {{1, 3}, {2, 0}, {3, 3}, {3, 3}}, finals);
}

// q0=0, f=1, sink=2; L = 0*1.
inline Dfa zerostar_one() {
  const State finals[] = {1};
  return Dfa(0, {{0, 1}, {2, 2}, {2, 2}}, finals);
}

// L = {eps}.
inline Dfa eps_only() {
  const State finals[] = {0};
  return Dfa(0, {{1, 1}, {1, 1}}, finals);
}

inline Dfa sink_only() { return Dfa(0, {{0, 0}}, {}); }

inline Dfa all_accepting() {
  const State finals[] = {0};
  return Dfa(0, {{0, 0}}, finals);
}

// Every word of length <= max_len, shortest first.
inline std::vector<std::string> all_strings(std::size_t max_len, char top = '1') {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c = '0'; c <= top; ++c) out.push_back(out[i] + c);
  }
  return out;
}

inline std::vector<Word> all_words(std::size_t max_len) {
  std::vector<Word> out;
  for (const auto& s : all_strings(max_len)) out.push_back(Word::parse(s));
  return out;
}

// Table walk without using run().
inline bool walk_accepts(const Dfa& m, const std::string& s) {
  State q = m.start();
  for (char c : s) q = m.delta()[q][c - '0'];
  return m.is_final(q);
}

// Accepted words of length <= bound, sorted by std::string comparison, which
// on '0'/'1' strings is exactly the lexicographic order with prefixes first.
inline std::vector<std::string> sorted_language(const Dfa& m, std::size_t bound) {
  std::vector<std::string> out;
  for (const auto& s : all_strings(bound)) {
    if (walk_accepts(m, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// reach[p][q]: q reachable from p by some word (possibly empty).
inline std::vector<std::vector<char>> reachability(const Dfa& m) {
  const std::size_t n = m.state_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    reach[p][p] = 1;
    std::vector<State> stack{static_cast<State>(p)};
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (State t : m.delta()[q]) {
        if (!reach[p][t]) {
          reach[p][t] = 1;
          stack.push_back(t);
        }
      }
    }
  }
  return reach;
}

// Uniform complete automaton, not trimmed.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n) {
  std::vector<Dfa::Row> delta(n);
  std::vector<State> finals;
  for (std::size_t q = 0; q < n; ++q) {
    delta[q] = {static_cast<State>(rng() % n), static_cast<State>(rng() % n)};
    if (rng() % 3 == 0) finals.push_back(static_cast<State>(q));
  }
  return Dfa(static_cast<State>(rng() % n), std::move(delta), finals);
}

}  // namespace ordfa::test
