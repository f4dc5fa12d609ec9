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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordfa/word.hpp"

namespace ordfa {

using State = std::uint32_t;

/// Complete deterministic automaton over the alphabet {0,1}.
///
/// States are the dense indices 0..state_count()-1. The transition table is
/// total; the constructor rejects out-of-range targets, start or finals.
class Dfa {
 public:
  using Row = std::array<State, 2>;

  Dfa(State start, std::vector<Row> delta, std::span<const State> finals);

  std::size_t state_count() const noexcept { return delta_.size(); }
  State start() const noexcept { return start_; }
  State next(State q, Letter b) const noexcept { return delta_[q][b]; }
  bool is_final(State q) const noexcept { return is_final_[q] != 0; }
  const std::vector<Row>& delta() const noexcept { return delta_; }
  std::vector<State> finals() const;

  /// The same automaton with a different start state.
  Dfa rerooted(State q) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  State start_;
  std::vector<Row> delta_;
  std::vector<char> is_final_;
};

/// q.u: left fold of the transition table over u.
State run(const Dfa& m, State q, const Word& u);
bool accepts(const Dfa& m, const Word& u);

/// live[q] iff L(q) is nonempty (q reaches a final state).
std::vector<char> live_states(const Dfa& m);
/// reachable[q] iff start.u = q for some u.
std::vector<char> reachable_states(const Dfa& m);

struct TrimReport {
  Dfa trimmed;
  /// Indexed by old state; absent for removed states.
  std::vector<std::optional<State>> state_map;
  std::vector<State> removed_unreachable;
  /// Reachable empty-language states folded into the sink, other than the
  /// one that represents it.
  std::vector<State> merged_into_sink;
  std::optional<State> sink;
};

/// Drops unreachable states and merges all empty-language states into one
/// sink with self-loops. Surviving states keep their relative order; the sink
/// takes the place of the least empty-language state.
TrimReport trim(const Dfa& m);

bool is_trim(const Dfa& m);

/// Strong components of the labeled graph and their DAG.
struct Condensation {
  std::vector<std::size_t> component_of;
  /// Component ids are in reverse topological order: every DAG edge goes
  /// from a larger id to a smaller one. Ties are broken by least member.
  std::vector<std::vector<State>> components;
  std::vector<std::pair<std::size_t, std::size_t>> dag_edges;
  std::vector<char> nontrivial;
  std::vector<std::size_t> height_of;

  bool same_component(State a, State b) const {
    return component_of[a] == component_of[b];
  }
};

Condensation condense(const Dfa& m);

/// The unique empty-language state. Throws kMultipleSinks if there are two.
std::optional<State> sink_of(const Dfa& m);

bool is_recursive(const Dfa& m, const Condensation& c, State q);
bool is_recursive(const Dfa& m, State q);

/// Shortest nonempty u with q.u = q. Requires the strong component of q to be
/// a simple cycle, which holds in every well-ordered automaton; otherwise
/// throws kNotSimpleCycle.
Word loop_word(const Dfa& m, const Condensation& c, State q);
Word loop_word(const Dfa& m, State q);

// JSON automaton format: {"start": n, "finals": [...], "delta": [[a, b], ...]}

/// Throws SyntaxError(kParse) naming the line and reason.
Dfa dfa_from_json(std::string_view text);
std::string dfa_to_json(const Dfa& m);

}  // namespace ordfa
