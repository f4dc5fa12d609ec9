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

#include "ordfa/dfa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "ordfa/error.hpp"

namespace ordfa {

Dfa::Dfa(State start, std::vector<Row> delta, std::span<const State> finals)
    : start_(start), delta_(std::move(delta)), is_final_(delta_.size(), 0) {
  const std::size_t n = delta_.size();
  if (n == 0) throw Error(ErrorCode::kInvalidDfa, "automaton has no states");
  if (n > std::numeric_limits<State>::max()) {
    throw Error(ErrorCode::kInvalidDfa, "too many states");
  }
  if (start_ >= n) {
    throw Error(ErrorCode::kInvalidDfa,
                "start state " + std::to_string(start_) + " out of range");
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter b : {0, 1}) {
      if (delta_[q][b] >= n) {
        throw Error(ErrorCode::kInvalidDfa,
                    "transition " + std::to_string(q) + "." +
                        std::to_string(b) + " -> " +
                        std::to_string(delta_[q][b]) + " out of range");
      }
    }
  }
  for (State f : finals) {
    if (f >= n) {
      throw Error(ErrorCode::kInvalidDfa,
                  "final state " + std::to_string(f) + " out of range");
    }
    is_final_[f] = 1;
  }
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < state_count(); ++q) {
    if (is_final(q)) out.push_back(q);
  }
  return out;
}

Dfa Dfa::rerooted(State q) const {
  Dfa copy = *this;
  if (q >= state_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "state " + std::to_string(q) + " out of range");
  }
  copy.start_ = q;
  return copy;
}

State run(const Dfa& m, State q, const Word& u) {
  for (std::size_t i = 0; i < u.size(); ++i) q = m.next(q, u[i]);
  return q;
}

bool accepts(const Dfa& m, const Word& u) {
  return m.is_final(run(m, m.start(), u));
}

std::vector<char> reachable_states(const Dfa& m) {
  std::vector<char> seen(m.state_count(), 0);
  std::vector<State> stack{m.start()};
  seen[m.start()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Letter b : {0, 1}) {
      State t = m.next(q, b);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<char> live_states(const Dfa& m) {
  const std::size_t n = m.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q) {
    for (Letter b : {0, 1}) preds[m.next(q, b)].push_back(q);
  }
  std::vector<char> live(n, 0);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q) {
    if (m.is_final(q)) {
      live[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return live;
}

TrimReport trim(const Dfa& m) {
  const std::size_t n = m.state_count();
  const auto reach = reachable_states(m);
  const auto live = live_states(m);

  std::vector<std::optional<State>> state_map(n);
  std::vector<State> removed, merged;
  std::optional<State> sink_old;  // representative of the merged sink
  std::optional<State> sink_new;
  State next_id = 0;
  for (State q = 0; q < n; ++q) {
    if (!reach[q]) {
      removed.push_back(q);
      continue;
    }
    if (live[q]) {
      state_map[q] = next_id++;
    } else if (!sink_old) {
      sink_old = q;
      sink_new = next_id++;
      state_map[q] = sink_new;
    } else {
      merged.push_back(q);
      state_map[q] = sink_new;
    }
  }

  std::vector<Dfa::Row> delta(next_id);
  std::vector<State> finals;
  for (State q = 0; q < n; ++q) {
    if (!state_map[q]) continue;
    State nq = *state_map[q];
    if (sink_new && nq == *sink_new) {
      delta[nq] = {nq, nq};
      continue;
    }
    delta[nq] = {*state_map[m.next(q, 0)], *state_map[m.next(q, 1)]};
    if (m.is_final(q)) finals.push_back(nq);
  }
  return TrimReport{Dfa(*state_map[m.start()], std::move(delta), finals),
                    std::move(state_map), std::move(removed),
                    std::move(merged), sink_new};
}

bool is_trim(const Dfa& m) {
  const auto reach = reachable_states(m);
  if (std::find(reach.begin(), reach.end(), 0) != reach.end()) return false;
  const auto live = live_states(m);
  return std::count(live.begin(), live.end(), 0) <= 1;
}

namespace {

// Iterative Tarjan; returns the component index of each state (arbitrary
// numbering) and the component count.
std::pair<std::vector<std::size_t>, std::size_t> tarjan(const Dfa& m) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = m.state_count();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<State> stack;
  std::size_t counter = 0, comps = 0;

  struct Frame {
    State q;
    int next_letter;
  };
  for (State root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_letter < 2) {
        State t = m.next(f.q, f.next_letter++);
        if (index[t] == kUnvisited) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.q] = std::min(low[f.q], index[t]);
        }
        continue;
      }
      State q = f.q;
      call.pop_back();
      if (!call.empty()) {
        State parent = call.back().q;
        low[parent] = std::min(low[parent], low[q]);
      }
      if (low[q] == index[q]) {
        State w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
        } while (w != q);
        ++comps;
      }
    }
  }
  return {comp, comps};
}

}  // namespace

Condensation condense(const Dfa& m) {
  const std::size_t n = m.state_count();
  auto [raw, count] = tarjan(m);

  std::vector<State> min_member(count, std::numeric_limits<State>::max());
  for (State q = 0; q < n; ++q) {
    min_member[raw[q]] = std::min(min_member[raw[q]], q);
  }
  std::vector<std::vector<std::size_t>> succ(count), pred(count);
  for (State q = 0; q < n; ++q) {
    for (Letter b : {0, 1}) {
      std::size_t a = raw[q], c = raw[m.next(q, b)];
      if (a != c) {
        succ[a].push_back(c);
        pred[c].push_back(a);
      }
    }
  }
  for (auto* lists : {&succ, &pred}) {
    for (auto& v : *lists) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  // Canonical numbering: bottom components first, ties by least member.
  std::vector<std::size_t> remaining(count), renum(count);
  using Item = std::pair<State, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c) {
    remaining[c] = succ[c].size();
    if (remaining[c] == 0) ready.push({min_member[c], c});
  }
  std::size_t next_id = 0;
  while (!ready.empty()) {
    std::size_t c = ready.top().second;
    ready.pop();
    renum[c] = next_id++;
    for (std::size_t p : pred[c]) {
      if (--remaining[p] == 0) ready.push({min_member[p], p});
    }
  }

  Condensation out;
  out.component_of.resize(n);
  out.components.resize(count);
  out.nontrivial.assign(count, 0);
  for (State q = 0; q < n; ++q) {
    out.component_of[q] = renum[raw[q]];
    out.components[renum[raw[q]]].push_back(q);
  }
  for (State q = 0; q < n; ++q) {
    for (Letter b : {0, 1}) {
      if (out.component_of[q] == out.component_of[m.next(q, b)]) {
        out.nontrivial[out.component_of[q]] = 1;
      }
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t s : succ[c]) out.dag_edges.emplace_back(renum[c], renum[s]);
  }
  std::sort(out.dag_edges.begin(), out.dag_edges.end());

  // below[c]: components strictly reachable from c. Successors of c have
  // smaller ids, so increasing id order is a valid evaluation order.
  std::vector<std::vector<char>> below(count, std::vector<char>(count, 0));
  std::vector<std::vector<std::size_t>> succ_new(count);
  for (auto [a, c] : out.dag_edges) succ_new[a].push_back(c);
  std::vector<std::size_t> comp_height(count, 0);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t s : succ_new[c]) {
      below[c][s] = 1;
      for (std::size_t t = 0; t < count; ++t) {
        if (below[s][t]) below[c][t] = 1;
      }
    }
    comp_height[c] =
        static_cast<std::size_t>(std::count(below[c].begin(), below[c].end(), 1));
  }
  out.height_of.resize(n);
  for (State q = 0; q < n; ++q) out.height_of[q] = comp_height[out.component_of[q]];
  return out;
}

std::optional<State> sink_of(const Dfa& m) {
  const auto live = live_states(m);
  std::optional<State> sink;
  for (State q = 0; q < m.state_count(); ++q) {
    if (live[q]) continue;
    if (sink) {
      throw Error(ErrorCode::kMultipleSinks,
                  "states " + std::to_string(*sink) + " and " +
                      std::to_string(q) +
                      " both have empty language (automaton is not trim)");
    }
    sink = q;
  }
  return sink;
}

bool is_recursive(const Dfa& m, const Condensation& c, State q) {
  if (!c.nontrivial[c.component_of[q]]) return false;
  // Nontrivial components of a trim automaton never contain the sink unless
  // the sink is alone with its self-loops.
  auto sink = sink_of(m);
  return !(sink && *sink == q);
}

bool is_recursive(const Dfa& m, State q) { return is_recursive(m, condense(m), q); }

Word loop_word(const Dfa& m, const Condensation& c, State q) {
  if (!is_recursive(m, c, q)) {
    throw Error(ErrorCode::kInvalidArgument,
                "state " + std::to_string(q) + " is not recursive");
  }
  const std::size_t comp = c.component_of[q];
  for (State p : c.components[comp]) {
    const bool stay0 = c.component_of[m.next(p, 0)] == comp;
    const bool stay1 = c.component_of[m.next(p, 1)] == comp;
    if (stay0 && stay1) {
      throw Error(ErrorCode::kNotSimpleCycle,
                  "state " + std::to_string(p) +
                      " has two in-component edges; component of state " +
                      std::to_string(q) + " is not a simple cycle");
    }
  }
  Word u;
  State p = q;
  do {
    Letter b = c.component_of[m.next(p, 0)] == comp ? 0 : 1;
    u.push_back(b);
    p = m.next(p, b);
  } while (p != q);
  return u;
}

Word loop_word(const Dfa& m, State q) { return loop_word(m, condense(m), q); }

// ---------------------------------------------------------------------------
// JSON

namespace {

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

std::size_t line_of_key(std::string_view text, std::string_view key) {
  std::string quoted = "\"" + std::string(key) + "\"";
  auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 1 : line_at(text, pos);
}

// Line on which the k-th row of the "delta" array opens.
std::size_t line_of_delta_row(std::string_view text, std::size_t k) {
  auto pos = text.find("\"delta\"");
  if (pos == std::string_view::npos) return 1;
  int depth = 0;
  std::size_t row = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] == '[') {
      if (++depth == 2 && row++ == k) return line_at(text, i);
    } else if (text[i] == ']') {
      if (--depth == 0) break;
    }
  }
  return line_of_key(text, "delta");
}

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw SyntaxError(ErrorCode::kParse, "line " + std::to_string(line) + ": " + reason,
                    0, line);
}

std::optional<State> as_state(const nlohmann::json& j) {
  if (!j.is_number_integer()) return std::nullopt;
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    if (v > std::numeric_limits<State>::max()) return std::nullopt;
    return static_cast<State>(v);
  }
  auto v = j.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<State>::max()) return std::nullopt;
  return static_cast<State>(v);
}

}  // namespace

Dfa dfa_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = line_at(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    // Strip nlohmann's "[json.exception.parse_error.101] " prefix.
    if (auto p = what.find("] "); p != std::string::npos) what = what.substr(p + 2);
    fail(line, "malformed JSON: " + what);
  }
  if (!doc.is_object()) fail(1, "top-level value must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "start" && key != "finals" && key != "delta") {
      fail(line_of_key(text, key), "unknown key \"" + key + "\"");
    }
  }
  for (const char* key : {"start", "finals", "delta"}) {
    if (!doc.contains(key)) fail(1, std::string("missing key \"") + key + "\"");
  }

  const auto& jdelta = doc["delta"];
  if (!jdelta.is_array() || jdelta.empty()) {
    fail(line_of_key(text, "delta"), "\"delta\" must be a nonempty array");
  }
  const std::size_t n = jdelta.size();
  std::vector<Dfa::Row> delta(n);
  for (std::size_t q = 0; q < n; ++q) {
    const auto& row = jdelta[q];
    if (!row.is_array() || row.size() != 2) {
      fail(line_of_delta_row(text, q),
           "delta row " + std::to_string(q) + " must be [on0, on1]");
    }
    for (Letter b : {0, 1}) {
      auto t = as_state(row[b]);
      if (!t || *t >= n) {
        fail(line_of_delta_row(text, q),
             "delta row " + std::to_string(q) + " letter " + std::to_string(b) +
                 ": target must be a state index below " + std::to_string(n));
      }
      delta[q][b] = *t;
    }
  }

  auto start = as_state(doc["start"]);
  if (!start || *start >= n) {
    fail(line_of_key(text, "start"),
         "\"start\" must be a state index below " + std::to_string(n));
  }

  const auto& jfinals = doc["finals"];
  if (!jfinals.is_array()) fail(line_of_key(text, "finals"), "\"finals\" must be an array");
  std::vector<State> finals;
  for (const auto& f : jfinals) {
    auto s = as_state(f);
    if (!s || *s >= n) {
      fail(line_of_key(text, "finals"),
           "final " + f.dump() + " is not a state index below " + std::to_string(n));
    }
    finals.push_back(*s);
  }
  return Dfa(*start, std::move(delta), finals);
}

std::string dfa_to_json(const Dfa& m) {
  std::ostringstream out;
  out << "{\n  \"start\": " << m.start() << ",\n  \"finals\": [";
  auto finals = m.finals();
  for (std::size_t i = 0; i < finals.size(); ++i) {
    out << (i ? ", " : "") << finals[i];
  }
  out << "],\n  \"delta\": [\n";
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    out << "    [" << m.delta()[q][0] << ", " << m.delta()[q][1] << "]"
        << (q + 1 < m.state_count() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace ordfa
