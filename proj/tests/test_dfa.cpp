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

#include <doctest.h>

#include <random>
#include <set>

#include "ordfa/dfa.hpp"
#include "ordfa/error.hpp"
#include "ordfa/wellorder.hpp"
#include "support.hpp"

using namespace ordfa;
using namespace ordfa::test;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ordfa::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("word basics") {
  Word w = Word::parse("0110");
  CHECK(w.size() == 4);
  CHECK(w[1] == 1);
  CHECK(w.prefix(2).str() == "01");
  CHECK(Word::parse("01").power(3).str() == "010101");
  CHECK(Word().power(5).empty());
  CHECK(Word().display() == "(eps)");
  CHECK(code_of([] { Word::parse("012"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("dfa construction validates its table") {
  CHECK(code_of([] { Dfa(0, {}, {}); }) == ErrorCode::kInvalidDfa);
  CHECK(code_of([] { Dfa(2, {{0, 0}}, {}); }) == ErrorCode::kInvalidDfa);
  CHECK(code_of([] { Dfa(0, {{0, 1}}, {}); }) == ErrorCode::kInvalidDfa);
  const State bad_final[] = {3};
  CHECK(code_of([&] { Dfa(0, {{0, 0}}, bad_final); }) == ErrorCode::kInvalidDfa);
}

TEST_CASE("run and accepts on fixtures") {
  const Dfa m = onestar();
  CHECK(run(m, 0, Word()) == 0);
  CHECK(run(m, 0, Word::parse("11")) == 0);
  CHECK(run(m, 0, Word::parse("10")) == 1);
  CHECK(accepts(m, Word()));
  CHECK_FALSE(accepts(m, Word::parse("10")));
  CHECK(accepts(cycle2(), Word::parse("0100")));
  CHECK(walk_accepts(cycle2(), "0100"));
}

TEST_CASE("trim") {
  SUBCASE("already trim automaton is unchanged") {
    auto r = trim(onestar());
    CHECK(r.trimmed == onestar());
    CHECK(r.removed_unreachable.empty());
    CHECK(r.merged_into_sink.empty());
    CHECK(r.sink == State{1});
    CHECK(is_trim(onestar()));
  }
  SUBCASE("two dead states are merged") {
    const State finals[] = {0};
    Dfa m(0, {{1, 2}, {1, 2}, {2, 1}}, finals);
    CHECK_FALSE(is_trim(m));
    auto r = trim(m);
    CHECK(r.trimmed.state_count() == 2);
    CHECK(r.merged_into_sink.size() == 1);
    CHECK(sink_of(r.trimmed).has_value());
    CHECK(is_trim(r.trimmed));
  }
  SUBCASE("unreachable final state is removed") {
    const State finals[] = {0, 2};
    Dfa m(0, {{1, 0}, {1, 1}, {0, 2}}, finals);
    auto r = trim(m);
    CHECK(r.removed_unreachable == std::vector<State>{2});
    CHECK(r.trimmed.state_count() == 2);
    CHECK_FALSE(r.state_map[2].has_value());
    CHECK(sorted_language(m, 8) == sorted_language(r.trimmed, 8));
  }
  SUBCASE("empty language gives the one-state automaton") {
    Dfa m(1, {{0, 0}, {0, 0}}, {});
    auto r = trim(m);
    CHECK(r.trimmed.state_count() == 1);
    CHECK(r.trimmed.finals().empty());
  }
}

TEST_CASE("trim preserves the language and is idempotent") {
  std::mt19937_64 rng(7);
  const auto words = all_strings(10);
  for (int i = 0; i < 60; ++i) {
    const Dfa m = random_dfa(rng, 1 + rng() % 8);
    const Dfa t = trim(m).trimmed;
    REQUIRE(is_trim(t));
    CHECK(trim(t).trimmed == t);
    for (const auto& s : words) {
      if (walk_accepts(m, s) != walk_accepts(t, s)) {
        FAIL_CHECK("language changed on " << s);
        break;
      }
    }
  }
}

TEST_CASE("condense on fixtures") {
  SUBCASE("onestar") {
    auto c = condense(onestar());
    CHECK(c.components.size() == 2);
    CHECK(c.nontrivial[c.component_of[0]]);
    CHECK(c.nontrivial[c.component_of[1]]);
    CHECK(c.height_of[0] == 1);
    CHECK(c.height_of[1] == 0);
  }
  SUBCASE("cycle2") {
    auto c = condense(cycle2());
    CHECK(c.components.size() == 3);
    CHECK(c.same_component(0, 1));
    CHECK_FALSE(c.same_component(1, 2));
    CHECK_FALSE(c.nontrivial[c.component_of[2]]);
    CHECK(c.height_of[0] == 2);
    CHECK(c.height_of[2] == 1);
    CHECK(c.height_of[3] == 0);
  }
  SUBCASE("single state") {
    auto c = condense(all_accepting());
    CHECK(c.components.size() == 1);
    CHECK(c.height_of[0] == 0);
  }
}

TEST_CASE("condense agrees with pairwise reachability") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Dfa m = random_dfa(rng, 1 + rng() % 8);
    const auto c = condense(m);
    const auto reach = reachability(m);
    const std::size_t n = m.state_count();
    for (State p = 0; p < n; ++p) {
      for (State q = 0; q < n; ++q) {
        CHECK(c.same_component(p, q) == (reach[p][q] && reach[q][p]));
      }
    }
    for (std::size_t k = 0; k < c.components.size(); ++k) {
      bool internal = false;
      for (State q : c.components[k]) {
        for (State t : m.delta()[q]) internal = internal || c.component_of[t] == k;
      }
      CHECK(c.nontrivial[k] == internal);
    }
    for (auto [hi, lo] : c.dag_edges) {
      CHECK(hi != lo);
      CHECK(c.height_of[c.components[lo].front()] < c.height_of[c.components[hi].front()]);
    }
    // Height is the number of components strictly reachable.
    for (State q = 0; q < n; ++q) {
      std::set<std::size_t> below;
      for (State t = 0; t < n; ++t) {
        if (reach[q][t] && !c.same_component(q, t)) below.insert(c.component_of[t]);
      }
      CHECK(c.height_of[q] == below.size());
    }
  }
}

TEST_CASE("sink_of") {
  CHECK(sink_of(onestar()) == State{1});
  CHECK_FALSE(sink_of(all_accepting()).has_value());
  CHECK(sink_of(cycle2()) == State{3});
  const State finals[] = {0};
  Dfa two_sinks(0, {{1, 2}, {1, 1}, {2, 2}}, finals);
  CHECK(code_of([&] { sink_of(two_sinks); }) == ErrorCode::kMultipleSinks);
}

TEST_CASE("is_recursive and loop_word") {
  CHECK(is_recursive(onestar(), 0));
  CHECK_FALSE(is_recursive(onestar(), 1));
  CHECK_FALSE(is_recursive(cycle2(), 2));
  CHECK(loop_word(onestar(), 0).str() == "1");
  CHECK(loop_word(cycle2(), 0).str() == "01");
  CHECK(loop_word(cycle2(), 1).str() == "10");
  CHECK(code_of([] { loop_word(all_accepting(), 0); }) == ErrorCode::kNotSimpleCycle);
  CHECK(code_of([] { loop_word(cycle2(), 2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("loops of recursive states in well-ordered automata are powers of u0") {
  std::mt19937_64 rng(3);
  int recursive_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const Dfa m = trim(random_dfa(rng, 1 + rng() % 8)).trimmed;
    if (!check(m).well_ordered()) continue;
    const auto c = condense(m);
    for (State q = 0; q < m.state_count(); ++q) {
      if (!is_recursive(m, c, q)) continue;
      ++recursive_seen;
      const std::string u0 = loop_word(m, c, q).str();
      for (const auto& v : all_strings(3 * u0.size())) {
        if (v.empty() || run(m, q, Word::parse(v)) != q) continue;
        bool power = v.size() % u0.size() == 0;
        for (std::size_t j = 0; power && j < v.size(); ++j) power = v[j] == u0[j % u0.size()];
        CHECK_MESSAGE(power, "state " << q << " loop " << v << " vs u0 " << u0);
      }
    }
  }
  CHECK(recursive_seen > 0);
}

TEST_CASE("rerooted") {
  const Dfa m = cycle2().rerooted(1);
  CHECK(m.start() == 1);
  CHECK(accepts(m, Word::parse("0")));
}

TEST_CASE("json round trip and exact format") {
  const std::string text =
      "{\n  \"start\": 0,\n  \"finals\": [0],\n  \"delta\": [\n    [1, 0],\n    [1, 1]\n  ]\n}\n";
  CHECK(dfa_to_json(onestar()) == text);
  CHECK(dfa_from_json(text) == onestar());
  CHECK(dfa_from_json(dfa_to_json(cycle2())) == cycle2());
  CHECK(dfa_to_json(sink_only()).find("\"finals\": []") != std::string::npos);
}

TEST_CASE("json errors carry a line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      dfa_from_json(text);
    } catch (const SyntaxError& e) {
      CHECK(e.code() == ErrorCode::kParse);
      return e.line();
    }
    FAIL("expected a syntax error");
    return 0;
  };
  CHECK(line_of("{\n\"start\": 0,\n\"finals\": [],\n\"delta\": [[0, 0]],\n\"extra\": 1\n}") == 5);
  CHECK(line_of("{\n\"start\": 0,\n\"finals\": []\n}") >= 1);
  CHECK(line_of("{\n\"start\": 0,\n\"finals\": [],\n\"delta\": [\n[0, 0],\n[0, 9]\n]\n}") == 6);
  CHECK(line_of("{\n\"start\": 0,\n\"finals\": [],\n\"delta\": [[0, 0]\n") >= 4);
  CHECK(line_of("{\"start\": 5, \"finals\": [], \"delta\": [[0, 0]]}") == 1);
  CHECK(line_of("{\"start\": -1, \"finals\": [], \"delta\": [[0, 0]]}") == 1);
  CHECK(line_of("{\"start\": 0, \"finals\": [0], \"delta\": [[0]]}") == 1);
  CHECK(line_of("[1, 2]") == 1);
}
