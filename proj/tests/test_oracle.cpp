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

#include <algorithm>
#include <set>

#include "ordfa/error.hpp"
#include "ordfa/oracle.hpp"
#include "ordfa/wellorder.hpp"
#include "support.hpp"

using namespace ordfa;
using namespace ordfa::test;
using namespace ordfa::oracle;

namespace {

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("enum_bounded") {
  CHECK(strs(enum_bounded(onestar(), 2)) == std::vector<std::string>{"", "1", "11"});
  CHECK(strs(enum_bounded(cycle2(), 4)) == std::vector<std::string>{"00", "0100"});
  CHECK(enum_bounded(sink_only(), 5).empty());
  CHECK(strs(enum_bounded(cycle2(), 8)) == sorted_language(cycle2(), 8));
  CHECK_THROWS_AS(enum_bounded(onestar(), 21), Error);
  CHECK_NOTHROW(enum_bounded(onestar(), 21, 21));
}

TEST_CASE("brute_rank") {
  CHECK(brute_rank(onestar(), Word::parse("11"), 6) == 2);
  CHECK(brute_rank(cycle2(), Word::parse("0100"), 8) == 1);
  CHECK(brute_rank(cycle2(), Word(), 8) == 0);
  CHECK(brute_rank(onestar(), Word(), 8) == 0);
  CHECK(brute_rank(zerostar_one(), Word::parse("1"), 5) == 4);
  try {
    brute_rank(onestar(), Word(), 30);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBoundTooLarge);
  }
}

TEST_CASE("brute_rank counts words below by definition") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Dfa m = random_trim_dfa(seed, 1 + seed % 6);
    const auto lang = sorted_language(m, 7);
    for (const auto& s : all_strings(4)) {
      const auto below = static_cast<std::uint64_t>(
          std::lower_bound(lang.begin(), lang.end(), s) - lang.begin());
      CHECK(brute_rank(m, Word::parse(s), 7) == below);
    }
  }
}

TEST_CASE("naive_check on fixtures") {
  CHECK(naive_check(onestar()).well_ordered());
  CHECK(naive_check(cycle2()).well_ordered());
  auto r = naive_check(zerostar_one());
  REQUIRE_FALSE(r.well_ordered());
  CHECK(r.witness->q == 0);
  CHECK(r.witness->u.empty());
}

TEST_CASE("random_trim_dfa") {
  CHECK(random_trim_dfa(42, 5) == random_trim_dfa(42, 5));
  int wo = 0, not_wo = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Dfa m = random_trim_dfa(seed, 6);
    REQUIRE(is_trim(m));
    (check(m).well_ordered() ? wo : not_wo)++;
  }
  CHECK(wo > 0);
  CHECK(not_wo > 0);
}

TEST_CASE("exhaustive enumeration") {
  CHECK(exhaustive_count(1) == 2);
  CHECK(exhaustive_count(2) == 64);
  CHECK(exhaustive_count(4) == 65536ull * 16);
  std::set<std::string> distinct;
  for (std::uint64_t i = 0; i < exhaustive_count(2); ++i) {
    distinct.insert(dfa_to_json(exhaustive_dfa(2, i)));
  }
  CHECK(distinct.size() == 64);
}

TEST_CASE("fuzz finds no disagreement") {
  FuzzConfig config;
  config.seeds = 100;
  config.states = 4;
  auto report = fuzz(config);
  CHECK(report.failures == 0);
  CHECK(report.total() == 100);
  CHECK(report.cases.size() == 100);
  CHECK(report.well_ordered > 0);
  CHECK(report.not_well_ordered > 0);

  config.exhaustive = true;
  config.states = 3;
  config.record_passing = false;
  report = fuzz(config);
  CHECK(report.failures == 0);
  CHECK(report.total() == exhaustive_count(1) + exhaustive_count(2) + exhaustive_count(3));
  CHECK(report.cases.empty());
}

TEST_CASE("fuzz report format") {
  FuzzConfig config;
  config.seeds = 3;
  config.first_seed = 10;
  const auto text = format_report(fuzz(config));
  CHECK(text.rfind("# seed\tstates\tverdict\tchecks-passed\tfirst-failure\n", 0) == 0);
  CHECK(text.find("\n10\t") != std::string::npos);
  CHECK(text.find("# summary\tcases=3\t") != std::string::npos);
  CHECK(format_report(fuzz(config)) == text);

  FuzzReport failing;
  failing.cases.push_back(FuzzCase{7, 2, FuzzCase::Verdict::kWellOrdered, 1, "boom"});
  failing.well_ordered = 1;
  failing.failures = 1;
  failing.first_failing_seed = 7;
  const auto f = format_report(failing, true);
  CHECK(f.find("7\t2\twell-ordered\t1\tboom\n") != std::string::npos);
  CHECK(f.find("first-failing-seed=7") != std::string::npos);
}
