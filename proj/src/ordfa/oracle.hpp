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
#include <cstdint>
#include <string>
#include <vector>

#include "ordfa/dfa.hpp"
#include "ordfa/wellorder.hpp"
#include "ordfa/word.hpp"

namespace ordfa::oracle {

inline constexpr std::size_t kDefaultBoundCap = 20;

/// All accepted words of length <= bound in <_l order, by testing each of the
/// 2^(bound+1)-1 candidates. Throws kBoundTooLarge if bound > cap.
std::vector<Word> enum_bounded(const Dfa& m, std::size_t bound,
                               std::size_t cap = kDefaultBoundCap);

/// Per-state path search realisation of the well-order test, sharing no code
/// with check(): for each state with a nonempty loop, look for a path from
/// q.0 back to q and test q.1 for a reachable final state. Same witness
/// selection rule as check().
CheckResult naive_check(const Dfa& m);

/// |{v in L(M) : |v| <= bound, v <_l w}|. Throws kBoundTooLarge if bound > cap.
std::uint64_t brute_rank(const Dfa& m, const Word& w, std::size_t bound,
                         std::size_t cap = kDefaultBoundCap);

/// Complete automaton on n states with uniform transitions, each state final
/// with probability 1/3 and start 0, then trimmed. Reproducible from the seed
/// on every platform.
Dfa random_trim_dfa(std::uint64_t seed, std::size_t n);

/// Number of complete automata with exactly n states, start 0 and any final
/// set: n^(2n) * 2^n.
std::uint64_t exhaustive_count(std::size_t n);
/// The index-th automaton in that enumeration (untrimmed).
Dfa exhaustive_dfa(std::size_t n, std::uint64_t index);

struct FuzzConfig {
  std::uint64_t seeds = 100;
  std::uint64_t first_seed = 0;
  std::size_t states = 4;
  /// Enumerate every automaton with 1..states states instead of sampling.
  bool exhaustive = false;
  std::size_t witness_depth = 32;
  /// Check rank() against enumerate() and brute_rank() for accepted words up
  /// to this length (0 disables).
  std::size_t rank_word_length = 6;
  /// Length cap for brute_rank inside the rank checks.
  std::size_t bound_cap = kDefaultBoundCap;
  /// When false only failing cases are kept in the report (the counters
  /// still cover every case).
  bool record_passing = true;
};

struct FuzzCase {
  std::uint64_t seed = 0;
  std::size_t states = 0;  // after trimming
  enum class Verdict { kWellOrdered, kNotWellOrdered, kError } verdict = Verdict::kError;
  std::size_t checks_passed = 0;
  std::string first_failure;  // empty when all checks passed
  bool failed() const noexcept { return !first_failure.empty(); }
};

struct FuzzReport {
  std::vector<FuzzCase> cases;  // sorted by seed
  std::size_t total() const noexcept { return well_ordered + not_well_ordered + errors; }
  std::size_t well_ordered = 0;
  std::size_t not_well_ordered = 0;
  std::size_t errors = 0;
  std::size_t failures = 0;
  std::size_t checks = 0;
  std::uint64_t first_failing_seed = 0;  // meaningful when failures > 0
};

/// Runs every invariant on one (already trimmed) automaton.
FuzzCase fuzz_one(const Dfa& trimmed, std::uint64_t seed, const FuzzConfig& config);

FuzzReport fuzz(const FuzzConfig& config);

/// TSV: a header comment, one line per case (seed, states, verdict,
/// checks-passed, first-failure) unless failures_only, then a summary line.
std::string format_report(const FuzzReport& report, bool failures_only = false);

const char* verdict_name(FuzzCase::Verdict v) noexcept;

}  // namespace ordfa::oracle
