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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordfa/dfa.hpp"
#include "ordfa/lexorder.hpp"
#include "ordfa/oracle.hpp"
#include "ordfa/ordtype.hpp"
#include "ordfa/synth.hpp"
#include "ordfa/wellorder.hpp"

using namespace ordfa;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_problem;

  void fail(const std::string& what) {
    if (pass) first_problem = what;
    pass = false;
  }
};

int g_failed = 0;

void run_criterion(int id, const char* name, double time_limit_s,
                   const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out = body();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    std::ostringstream s;
    s << "runtime " << secs << " s exceeds " << time_limit_s << " s";
    out.fail(s.str());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  std::printf("%s criterion %d: %s (%s; %s)%s%s\n", out.pass ? "PASS" : "FAIL", id, name,
              out.detail.c_str(), buf, out.pass ? "" : " first problem: ",
              out.first_problem.c_str());
  std::fflush(stdout);
  if (!out.pass) ++g_failed;
}

std::vector<std::string> strings_up_to(std::size_t max_len, char top) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c = '0'; c <= top; ++c) out.push_back(out[i] + c);
  }
  return out;
}

bool is_prefix(const std::string& a, const std::string& b) {
  return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

std::string dfa_label(const Dfa& m) {
  std::string s = dfa_to_json(m);
  s.erase(std::remove(s.begin(), s.end(), '\n'), s.end());
  return s;
}

// Well-ordered automata collected while running criteria 2 and 3.
std::vector<Dfa> g_exhaustive_wo;
std::vector<Dfa> g_sampled_wo;

// Shared body of criteria 2 and 3.
void differential(const Dfa& m, Outcome& out, std::vector<Dfa>& wo_sink, std::size_t& wo,
                  std::size_t& not_wo) {
  const CheckResult fast = check(m);
  const CheckResult naive = oracle::naive_check(m);
  if (!(fast == naive)) {
    out.fail("check and naive_check disagree on " + dfa_label(m));
    return;
  }
  if (fast.well_ordered()) {
    ++wo;
    wo_sink.push_back(m);
    return;
  }
  ++not_wo;
  const auto v = verify_witness(m, *fast.witness, 32);
  if (!v.ok) out.fail("witness fails (" + v.reason + ") on " + dfa_label(m));
}

Outcome round_trip() {
  Outcome out;
  std::vector<Ordinal> alphas;
  for (int code = 0; code < 4 * 4 * 4 * 4 * 4; ++code) {
    std::vector<Natural> c;
    for (int k = 0, x = code; k < 5; ++k, x /= 4) c.push_back(x % 4);
    alphas.push_back(Ordinal::from_coefficients(c));
  }
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 200; ++i) {
    std::vector<Natural> c(1 + rng() % 7);
    for (auto& x : c) x = rng() % 6;
    alphas.push_back(Ordinal::from_coefficients(c));
  }
  for (const auto& a : alphas) {
    const Ordinal back = order_type(synth(a)).overall;
    if (back != a) out.fail(format_ord(a) + " came back as " + format_ord(back));
  }
  out.detail = std::to_string(alphas.size()) + " ordinals";
  return out;
}

Outcome exhaustive_characterization() {
  Outcome out;
  std::size_t total = 0, wo = 0, not_wo = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t count = oracle::exhaustive_count(n);
    for (std::uint64_t i = 0; i < count; ++i) {
      const Dfa m = trim(oracle::exhaustive_dfa(n, i)).trimmed;
      ++total;
      differential(m, out, g_exhaustive_wo, wo, not_wo);
    }
  }
  out.detail = std::to_string(total) + " automata, " + std::to_string(wo) + " well-ordered, " +
               std::to_string(not_wo) + " witnesses verified to depth 32";
  return out;
}

Outcome sampled_characterization() {
  Outcome out;
  std::size_t wo = 0, not_wo = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const Dfa m = oracle::random_trim_dfa(seed, 1 + seed % 8);
    differential(m, out, g_sampled_wo, wo, not_wo);
  }
  out.detail = "10000 automata, " + std::to_string(wo) + " well-ordered, " +
               std::to_string(not_wo) + " witnesses verified";
  return out;
}

Outcome fixed_points() {
  Outcome out;
  const State onestar_finals[] = {0};
  const Dfa onestar(0, {{1, 0}, {1, 1}}, onestar_finals);
  const Ordinal t = order_type(onestar).overall;
  if (t != Ordinal::omega_power(1)) out.fail("type of 1* is " + format_ord(t));

  const Dfa m = synth_mul_omega(synth_one());
  // 1*0 up to length 10, compared word by word.
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w;
      for (std::size_t i = len; i-- > 0;) w.push_back(static_cast<Letter>((bits >> i) & 1));
      const std::string& s = w.str();
      const bool in_language =
          !s.empty() && s.back() == '0' && s.find('0') == s.size() - 1;
      if (accepts(m, w) != in_language) out.fail("x w of {eps} wrong on " + w.display());
    }
  }
  const Ordinal tm = order_type(m).overall;
  if (tm != Ordinal::omega_power(1)) out.fail("type of 1*0 is " + format_ord(tm));

  std::vector<Word> chain;
  for (const char* s : {"11", "10", "01", "00"}) chain.push_back(Word::parse(s));
  const auto a = analyze_chain(chain);
  const std::vector<ActivePosition> expected{{0, 2}, {1, 3}};
  if (a.sequence != expected) out.fail("chain analysis sequence differs");
  out.detail = "1* -> w, 1*0 -> w, (i0,t0,i1,t1) = (0,2,1,3)";
  return out;
}

Outcome height_bound() {
  Outcome out;
  std::size_t states = 0, automata = 0;
  for (const auto* pool : {&g_exhaustive_wo, &g_sampled_wo}) {
    for (const Dfa& m : *pool) {
      ++automata;
      const auto c = condense(m);
      const auto t = order_type(m);
      for (State q = 0; q < m.state_count(); ++q) {
        ++states;
        if (t.per_state[q].degree() > static_cast<int>(c.height_of[q])) {
          out.fail("state " + std::to_string(q) + " of " + dfa_label(m));
        }
      }
      if (t.overall.degree() > static_cast<int>(m.state_count())) {
        out.fail("overall degree of " + dfa_label(m));
      }
    }
  }
  out.detail = std::to_string(automata) + " automata, " + std::to_string(states) + " states";
  return out;
}

Outcome rank_consistency() {
  Outcome out;
  std::size_t words = 0;
  for (const Dfa& m : g_sampled_wo) {
    const auto table = order_type(m);
    for (std::size_t len = 0; len <= 6; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        Word w;
        for (std::size_t i = len; i-- > 0;) w.push_back(static_cast<Letter>((bits >> i) & 1));
        if (!accepts(m, w)) continue;
        const Ordinal r = rank(m, table, w);
        if (!r.is_finite()) continue;
        ++words;
        const auto n = static_cast<std::size_t>(r.coefficient(0));
        const auto listed = enumerate(m, n + 1);
        bool ok = listed.size() == n + 1 && listed[n] == w;
        std::size_t longest = w.size();
        for (std::size_t i = 0; ok && i < n; ++i) {
          ok = lex_less(listed[i], w) && accepts(m, listed[i]);
          longest = std::max(longest, listed[i].size());
        }
        if (!ok) {
          out.fail("enumerate disagrees with rank(" + w.display() + ") on " + dfa_label(m));
          continue;
        }
        const std::size_t cap = 24;
        if (longest + 1 > cap) continue;
        const auto b0 = oracle::brute_rank(m, w, longest, cap);
        const auto b1 = oracle::brute_rank(m, w, longest + 1, cap);
        if (b0 != n || b1 != n) {
          out.fail("brute_rank disagrees with rank(" + w.display() + ") on " + dfa_label(m));
        }
      }
    }
  }
  out.detail = std::to_string(g_sampled_wo.size()) + " automata, " + std::to_string(words) +
               " words with finite rank";
  return out;
}

Outcome lex_axioms() {
  Outcome out;
  const auto strs = strings_up_to(6, '1');
  std::vector<Word> words;
  for (const auto& s : strs) words.push_back(Word::parse(s));
  const std::size_t n = words.size();

  // Part 1: exactly one relation holds, and it is the right one.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = strs[i];
      const auto& b = strs[j];
      const bool eq = a == b;
      const bool pl = !eq && is_prefix(a, b);
      const bool pg = !eq && is_prefix(b, a);
      bool sl = false, sg = false;
      if (!eq && !pl && !pg) {
        std::size_t k = 0;
        while (a[k] == b[k]) ++k;
        sl = a[k] == '0';
        sg = !sl;
      }
      if (eq + pl + pg + sl + sg != 1) out.fail("trichotomy model broken on " + a + "," + b);
      const LexRelation r = compare_lex(words[i], words[j]);
      const bool match = (r == LexRelation::kEqual && eq) ||
                         (r == LexRelation::kPrefixLess && pl) ||
                         (r == LexRelation::kPrefixGreater && pg) ||
                         (r == LexRelation::kStrictLess && sl) ||
                         (r == LexRelation::kStrictGreater && sg);
      if (!match) out.fail("compare_lex wrong on " + a + "," + b);
    }
  }
  // Part 2 (as translation invariance of <_l): u <_l v iff wu <_l wv.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool base = lex_less(words[i], words[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (lex_less(words[k] + words[i], words[k] + words[j]) != base) {
          out.fail("translation fails on " + strs[k] + "|" + strs[i] + "," + strs[j]);
        }
      }
    }
  }
  // Part 3: u <_s v implies uw <_s vw' (w, w' of length <= 4).
  const std::size_t short_count = strings_up_to(4, '1').size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict_less(words[i], words[j])) continue;
      for (std::size_t a = 0; a < short_count; ++a) {
        const Word left = words[i] + words[a];
        for (std::size_t b = 0; b < short_count; ++b) {
          if (!strict_less(left, words[j] + words[b])) {
            out.fail("right absorption fails on " + strs[i] + "," + strs[j]);
          }
        }
      }
    }
  }
  // Part 4: u <_s v iff some cut-off i has u[0..i] <_s v[0..i] with equal
  // prefixes below i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = strs[i];
      const auto& b = strs[j];
      bool cut = false;
      for (std::size_t k = 0; k < std::min(a.size(), b.size()) && !cut; ++k) {
        cut = a.compare(0, k, b, 0, k) == 0 &&
              strict_less(words[i].prefix(k + 1), words[j].prefix(k + 1));
      }
      if (cut != strict_less(words[i], words[j])) out.fail("cut-off fails on " + a + "," + b);
    }
  }
  // The ternary embedding is order preserving.
  const auto ternary = strings_up_to(6, '2');
  std::vector<Word> images;
  for (const auto& s : ternary) images.push_back(embed3to2(s));
  for (std::size_t i = 0; i < ternary.size(); ++i) {
    for (std::size_t j = 0; j < ternary.size(); ++j) {
      if ((ternary[i] < ternary[j]) != lex_less(images[i], images[j])) {
        out.fail("embedding not order preserving on " + ternary[i] + "," + ternary[j]);
      }
    }
  }
  out.detail = std::to_string(n) + " binary words, " + std::to_string(ternary.size()) +
               " ternary words";
  return out;
}

Outcome guarded(Outcome (*body)()) {
  try {
    return body();
  } catch (const std::exception& e) {
    Outcome out;
    out.fail(std::string("exception: ") + e.what());
    return out;
  }
}

}  // namespace

int main() {
  run_criterion(1, "round trip order_type(synth(a)) = a", 10,
                [] { return guarded(round_trip); });
  run_criterion(2, "exhaustive characterization, <= 4 states", 60,
                [] { return guarded(exhaustive_characterization); });
  run_criterion(3, "sampled characterization, 10000 automata <= 8 states", 0,
                [] { return guarded(sampled_characterization); });
  run_criterion(4, "fixed points: 1*, 1*0 and a four-word chain", 0, [] { return guarded(fixed_points); });
  run_criterion(5, "height bound and degree <= state count", 0,
                [] { return guarded(height_bound); });
  run_criterion(6, "rank consistency", 0, [] { return guarded(rank_consistency); });
  run_criterion(7, "lexicographic axioms and ternary embedding, length <= 6", 10,
                [] { return guarded(lex_axioms); });
  std::printf("%s: %d of 7 criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
  return g_failed ? 1 : 0;
}
