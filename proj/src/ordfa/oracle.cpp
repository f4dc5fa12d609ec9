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

#include "ordfa/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <sstream>

#include "ordfa/error.hpp"
#include "ordfa/lexorder.hpp"
#include "ordfa/ordtype.hpp"

namespace ordfa::oracle {

namespace {

void check_bound(std::size_t bound, std::size_t cap) {
  if (bound > cap) {
    throw Error(ErrorCode::kBoundTooLarge,
                "length bound " + std::to_string(bound) + " exceeds the cap " +
                    std::to_string(cap));
  }
}

// Breadth-first search from a single state; true iff some state satisfying
// `goal` is reachable by a word of length >= min_length (0 or 1).
template <typename Goal>
bool path_exists(const Dfa& m, State from, std::size_t min_length, Goal goal) {
  std::vector<char> seen(m.state_count(), 0);
  std::deque<State> queue;
  if (min_length == 0) {
    queue.push_back(from);
    seen[from] = 1;
  } else {
    for (Letter b : {0, 1}) {
      State t = m.next(from, b);
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  }
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    if (goal(p)) return true;
    for (Letter b : {0, 1}) {
      State t = m.next(p, b);
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  }
  return false;
}

bool language_empty(const Dfa& m, State q) {
  return !path_exists(m, q, 0, [&m](State p) { return m.is_final(p); });
}

// Lexicographically least shortest word from `from` into the goal set:
// distances to the goal by backward BFS, then a greedy descent preferring 0.
template <typename Goal>
Word least_shortest_word(const Dfa& m, State from, Goal goal) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = m.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q) {
    for (Letter b : {0, 1}) preds[m.next(q, b)].push_back(q);
  }
  std::vector<std::size_t> dist(n, kInf);
  std::deque<State> queue;
  for (State q = 0; q < n; ++q) {
    if (goal(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    for (State r : preds[p]) {
      if (dist[r] == kInf) {
        dist[r] = dist[p] + 1;
        queue.push_back(r);
      }
    }
  }
  if (dist[from] == kInf) throw Error(ErrorCode::kInvalidArgument, "goal unreachable");
  Word w;
  for (State p = from; dist[p] > 0;) {
    Letter b = dist[m.next(p, 0)] + 1 == dist[p] ? 0 : 1;
    w.push_back(b);
    p = m.next(p, b);
  }
  return w;
}

}  // namespace

std::vector<Word> enum_bounded(const Dfa& m, std::size_t bound, std::size_t cap) {
  check_bound(bound, cap);
  std::vector<Word> out;
  for (std::size_t len = 0; len <= bound; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w;
      for (std::size_t i = len; i-- > 0;) w.push_back(static_cast<Letter>((bits >> i) & 1));
      if (accepts(m, w)) out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return lex_less(a, b); });
  return out;
}

CheckResult naive_check(const Dfa& m) {
  const std::size_t n = m.state_count();
  std::vector<char> empty(n, 0);
  std::size_t empty_count = 0;
  for (State q = 0; q < n; ++q) {
    if (!path_exists(m, m.start(), 0, [q](State p) { return p == q; })) {
      throw Error(ErrorCode::kNotTrim, "state " + std::to_string(q) + " is unreachable");
    }
    empty[q] = language_empty(m, q) ? 1 : 0;
    empty_count += empty[q];
  }
  if (empty_count > 1) throw Error(ErrorCode::kNotTrim, "more than one empty-language state");

  for (State q = 0; q < n; ++q) {
    if (empty[q]) continue;
    auto is_q = [q](State p) { return p == q; };
    if (!path_exists(m, q, 1, is_q)) continue;             // q is not recursive
    if (!path_exists(m, m.next(q, 0), 0, is_q)) continue;  // q.0 does not return
    if (empty[m.next(q, 1)]) continue;
    Witness w;
    w.q = q;
    w.x = least_shortest_word(m, m.start(), is_q);
    w.u = least_shortest_word(m, m.next(q, 0), is_q);
    w.v = least_shortest_word(m, m.next(q, 1), [&m](State p) { return m.is_final(p); });
    return CheckResult{std::move(w)};
  }
  return CheckResult{};
}

std::uint64_t brute_rank(const Dfa& m, const Word& w, std::size_t bound, std::size_t cap) {
  check_bound(bound, cap);
  std::vector<char> dead(m.state_count());
  for (State q = 0; q < m.state_count(); ++q) dead[q] = language_empty(m, q) ? 1 : 0;

  // Depth-first preorder with 0 before 1 visits words in increasing <_l
  // order, so the walk stops at the first word that is not below w.
  std::uint64_t count = 0;
  bool done = false;
  Word current;
  auto visit = [&](auto&& self, State p) -> void {
    if (!lex_less(current, w)) {
      done = true;
      return;
    }
    if (m.is_final(p)) ++count;
    if (current.size() == bound) return;
    for (Letter b : {0, 1}) {
      State t = m.next(p, b);
      if (dead[t]) continue;
      Word saved = current;
      current.push_back(b);
      self(self, t);
      current = std::move(saved);
      if (done) return;
    }
  };
  if (!dead[m.start()]) visit(visit, m.start());
  return count;
}

Dfa random_trim_dfa(std::uint64_t seed, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "state count must be positive");
  // mt19937_64 output is fixed by the standard; distributions are not, so
  // reduce the raw output directly.
  std::mt19937_64 rng(seed);
  std::vector<Dfa::Row> delta(n);
  std::vector<State> finals;
  for (std::size_t q = 0; q < n; ++q) {
    delta[q][0] = static_cast<State>(rng() % n);
    delta[q][1] = static_cast<State>(rng() % n);
    if (rng() % 3 == 0) finals.push_back(static_cast<State>(q));
  }
  return trim(Dfa(0, std::move(delta), finals)).trimmed;
}

std::uint64_t exhaustive_count(std::size_t n) {
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < 2 * n; ++i) count *= n;
  return count;
}

Dfa exhaustive_dfa(std::size_t n, std::uint64_t index) {
  if (n == 0 || index >= exhaustive_count(n)) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive index out of range");
  }
  std::vector<State> finals;
  for (std::size_t q = 0; q < n; ++q) {
    if ((index >> q) & 1) finals.push_back(static_cast<State>(q));
  }
  index >>= n;
  std::vector<Dfa::Row> delta(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter b : {0, 1}) {
      delta[q][b] = static_cast<State>(index % n);
      index /= n;
    }
  }
  return Dfa(0, std::move(delta), finals);
}

// ---------------------------------------------------------------------------
// Fuzzing

namespace {

std::string describe(const CheckResult& r) {
  if (r.well_ordered()) return "well-ordered";
  const Witness& w = *r.witness;
  return "witness(q=" + std::to_string(w.q) + ", x=" + w.x.display() +
         ", u=" + w.u.display() + ", v=" + w.v.display() + ")";
}

class CaseRunner {
 public:
  CaseRunner(FuzzCase& c) : case_(c) {}

  // Records the first failure; returns `ok` for chaining.
  bool expect(bool ok, const std::string& what) {
    if (ok) {
      ++case_.checks_passed;
    } else if (case_.first_failure.empty()) {
      case_.first_failure = what;
    }
    return ok;
  }

 private:
  FuzzCase& case_;
};

void rank_checks(const Dfa& m, const OrderTypeTable& table, const FuzzConfig& config,
                 CaseRunner& run) {
  for (std::size_t len = 0; len <= config.rank_word_length; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w;
      for (std::size_t i = len; i-- > 0;) w.push_back(static_cast<Letter>((bits >> i) & 1));
      if (!accepts(m, w)) continue;
      const Ordinal r = rank(m, table, w);
      if (!r.is_finite()) continue;
      const auto count = static_cast<std::size_t>(r.coefficient(0));
      const auto listed = enumerate(m, count + 1);
      bool ok = listed.size() == count + 1 && listed[count] == w;
      std::size_t longest = w.size();
      for (std::size_t i = 0; ok && i < count; ++i) {
        ok = lex_less(listed[i], w) && accepts(m, listed[i]);
        longest = std::max(longest, listed[i].size());
      }
      if (!run.expect(ok, "rank(" + w.display() + ")=" + format_ord(r) +
                              " disagrees with enumerate")) {
        return;
      }
      if (longest + 1 > config.bound_cap) continue;
      const auto b0 = brute_rank(m, w, longest, config.bound_cap);
      const auto b1 = brute_rank(m, w, longest + 1, config.bound_cap);
      if (!run.expect(b0 == count && b1 == count,
                      "rank(" + w.display() + ")=" + format_ord(r) + " but brute_rank gives " +
                          std::to_string(b0) + "," + std::to_string(b1))) {
        return;
      }
    }
  }
}

}  // namespace

FuzzCase fuzz_one(const Dfa& m, std::uint64_t seed, const FuzzConfig& config) {
  FuzzCase result;
  result.seed = seed;
  result.states = m.state_count();
  CaseRunner run(result);
  try {
    const CheckResult fast = check(m);
    const CheckResult naive = naive_check(m);
    run.expect(fast == naive, "check gives " + describe(fast) + ", naive_check gives " +
                                  describe(naive));
    if (!fast.well_ordered()) {
      result.verdict = FuzzCase::Verdict::kNotWellOrdered;
      auto v = verify_witness(m, *fast.witness, config.witness_depth);
      run.expect(v.ok, "witness fails: " + v.reason);
      return result;
    }
    result.verdict = FuzzCase::Verdict::kWellOrdered;

    try {
      min_word(m);
      run.expect(true, "");
    } catch (const Error& e) {
      run.expect(false, std::string("min_word on a well-ordered language: ") + e.what());
    }

    const auto table = order_type(m);
    const auto c = condense(m);
    bool height_ok = true, constant_ok = true, monotone_ok = true;
    for (State q = 0; q < m.state_count(); ++q) {
      const auto& t = table.per_state[q];
      if (t.degree() > static_cast<int>(c.height_of[q])) height_ok = false;
      if (t != table.per_state[c.components[c.component_of[q]].front()]) constant_ok = false;
    }
    for (auto [hi, lo] : c.dag_edges) {
      if (table.per_state[c.components[lo].front()] > table.per_state[c.components[hi].front()]) {
        monotone_ok = false;
      }
    }
    run.expect(height_ok, "order type degree exceeds height");
    run.expect(table.overall.degree() <= static_cast<int>(m.state_count()),
               "overall degree exceeds state count");
    run.expect(constant_ok, "order type differs within a strong component");
    run.expect(monotone_ok, "order type increases along a component edge");

    if (config.rank_word_length > 0) rank_checks(m, table, config, run);
  } catch (const std::exception& e) {
    run.expect(false, std::string("exception: ") + e.what());
  }
  return result;
}

FuzzReport fuzz(const FuzzConfig& config) {
  FuzzReport report;
  auto record = [&report, &config](FuzzCase c) {
    if (c.verdict == FuzzCase::Verdict::kWellOrdered) ++report.well_ordered;
    if (c.verdict == FuzzCase::Verdict::kNotWellOrdered) ++report.not_well_ordered;
    if (c.verdict == FuzzCase::Verdict::kError) ++report.errors;
    report.checks += c.checks_passed;
    if (c.failed() && report.failures++ == 0) report.first_failing_seed = c.seed;
    if (config.record_passing || c.failed()) report.cases.push_back(std::move(c));
  };
  if (config.exhaustive) {
    std::uint64_t seed = 0;
    for (std::size_t n = 1; n <= config.states; ++n) {
      const std::uint64_t total = exhaustive_count(n);
      for (std::uint64_t i = 0; i < total; ++i, ++seed) {
        record(fuzz_one(trim(exhaustive_dfa(n, i)).trimmed, seed, config));
      }
    }
  } else {
    for (std::uint64_t k = 0; k < config.seeds; ++k) {
      const std::uint64_t seed = config.first_seed + k;
      record(fuzz_one(random_trim_dfa(seed, config.states), seed, config));
    }
  }
  return report;
}

const char* verdict_name(FuzzCase::Verdict v) noexcept {
  switch (v) {
    case FuzzCase::Verdict::kWellOrdered: return "well-ordered";
    case FuzzCase::Verdict::kNotWellOrdered: return "not-well-ordered";
    case FuzzCase::Verdict::kError: return "error";
  }
  return "?";
}

std::string format_report(const FuzzReport& report, bool failures_only) {
  std::ostringstream out;
  out << "# seed\tstates\tverdict\tchecks-passed\tfirst-failure\n";
  for (const auto& c : report.cases) {
    if (failures_only && !c.failed()) continue;
    out << c.seed << '\t' << c.states << '\t' << verdict_name(c.verdict) << '\t'
        << c.checks_passed << '\t' << (c.failed() ? c.first_failure : "-") << '\n';
  }
  out << "# summary\tcases=" << report.total() << "\twell-ordered=" << report.well_ordered
      << "\tnot-well-ordered=" << report.not_well_ordered << "\tchecks=" << report.checks
      << "\tfailures=" << report.failures;
  if (report.failures > 0) out << "\tfirst-failing-seed=" << report.first_failing_seed;
  out << '\n';
  return out.str();
}

}  // namespace ordfa::oracle
