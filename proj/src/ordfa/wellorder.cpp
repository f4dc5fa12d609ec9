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

#include "ordfa/wellorder.hpp"

#include <deque>

#include "ordfa/error.hpp"
#include "ordfa/lexorder.hpp"

namespace ordfa {

void require_trim(const Dfa& m) {
  const auto reach = reachable_states(m);
  for (State q = 0; q < m.state_count(); ++q) {
    if (!reach[q]) {
      throw Error(ErrorCode::kNotTrim,
                  "state " + std::to_string(q) + " is unreachable from the start");
    }
  }
  try {
    sink_of(m);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotTrim, e.what());
  }
}

namespace {

// Shortest word (0 before 1 among equals) leading from `from` to a state
// satisfying `goal`. BFS in letter order discovers every state first along
// its lexicographically least shortest path.
template <typename Goal>
Word shortest_word(const Dfa& m, State from, Goal goal) {
  const std::size_t n = m.state_count();
  std::vector<char> seen(n, 0);
  std::vector<std::pair<State, Letter>> parent(n);
  std::deque<State> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    if (goal(p)) {
      Word rev;
      for (State s = p; s != from; s = parent[s].first) rev.push_back(parent[s].second);
      Word w;
      for (std::size_t i = rev.size(); i-- > 0;) w.push_back(rev[i]);
      return w;
    }
    for (Letter b : {0, 1}) {
      State t = m.next(p, b);
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = {p, b};
        queue.push_back(t);
      }
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no path to goal state");
}

}  // namespace

CheckResult check(const Dfa& m) {
  require_trim(m);
  const auto sink = sink_of(m);
  const auto c = condense(m);
  for (State q = 0; q < m.state_count(); ++q) {
    if (sink && q == *sink) continue;
    if (!c.same_component(q, m.next(q, 0))) continue;
    const State one = m.next(q, 1);
    if (sink && one == *sink) continue;
    Witness w;
    w.q = q;
    w.x = shortest_word(m, m.start(), [q](State p) { return p == q; });
    w.u = shortest_word(m, m.next(q, 0), [q](State p) { return p == q; });
    w.v = shortest_word(m, one, [&m](State p) { return m.is_final(p); });
    return CheckResult{std::move(w)};
  }
  return CheckResult{};
}

Word witness_chain(const Witness& w, std::size_t n) {
  Word loop = word_from_letter(0) + w.u;
  return w.x + loop.power(n) + word_from_letter(1) + w.v;
}

WitnessVerification verify_witness(const Dfa& m, const Witness& w, std::size_t upto) {
  if (upto == 0) return {};
  Word current = witness_chain(w, 0);
  for (std::size_t n = 0; n < upto; ++n) {
    Word next = witness_chain(w, n + 1);
    if (!accepts(m, current)) {
      return {false, n, "chain word " + std::to_string(n) + " (" + current.display() +
                            ") is not accepted"};
    }
    if (!strict_less(next, current)) {
      return {false, n, "chain word " + std::to_string(n + 1) + " (" + next.display() +
                            ") is not strictly below chain word " + std::to_string(n)};
    }
    current = std::move(next);
  }
  return {};
}

}  // namespace ordfa
