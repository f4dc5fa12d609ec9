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

#include "ordfa/synth.hpp"

#include <optional>

#include "ordfa/error.hpp"

namespace ordfa {

Dfa synth_zero() {
  return Dfa(0, {{0, 0}}, {});
}

Dfa synth_one() {
  const State finals[] = {0};
  return Dfa(0, {{1, 1}, {1, 1}}, finals);
}

namespace {

// Appends the states of m at `offset`, returning m's relocated start.
State append_copy(const Dfa& m, State offset, std::vector<Dfa::Row>& delta,
                  std::vector<State>& finals) {
  for (State q = 0; q < m.state_count(); ++q) {
    delta.push_back({m.next(q, 0) + offset, m.next(q, 1) + offset});
    if (m.is_final(q)) finals.push_back(q + offset);
  }
  return m.start() + offset;
}

}  // namespace

Dfa synth_sum(const Dfa& m1, const Dfa& m2) {
  std::vector<Dfa::Row> delta;
  std::vector<State> finals;
  const State s1 = append_copy(m1, 0, delta, finals);
  const State s2 = append_copy(m2, static_cast<State>(m1.state_count()), delta, finals);
  const State start = static_cast<State>(delta.size());
  delta.push_back({s1, s2});
  return trim(Dfa(start, std::move(delta), finals)).trimmed;
}

Dfa synth_mul_omega(const Dfa& m) {
  const auto live = live_states(m);
  if (!live[m.start()]) {
    throw Error(ErrorCode::kEmptyLanguage, "cannot loop over an empty language");
  }
  std::vector<Dfa::Row> delta;
  std::vector<State> finals;
  const State s = append_copy(m, 0, delta, finals);
  const State start = static_cast<State>(delta.size());
  delta.push_back({s, start});
  return trim(Dfa(start, std::move(delta), finals)).trimmed;
}

Dfa synth(const Ordinal& a) {
  if (a.is_zero()) return synth_zero();

  Natural estimate = 0;
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) {
    estimate += a.coefficients()[k] * (k + 2);
  }
  if (estimate > kMaxSynthStates) {
    throw Error(ErrorCode::kInvalidArgument,
                "ordinal " + format_ord(a) + " needs " + estimate.str() +
                    " states, above the synthesis limit");
  }

  std::optional<Dfa> result;
  for (std::size_t k = a.coefficients().size(); k-- > 0;) {
    const auto count = static_cast<std::size_t>(a.coefficients()[k]);
    if (count == 0) continue;
    Dfa power = synth_one();
    for (std::size_t i = 0; i < k; ++i) power = synth_mul_omega(power);
    for (std::size_t i = 0; i < count; ++i) {
      result = result ? synth_sum(*result, power) : power;
    }
  }
  return trim(*result).trimmed;
}

}  // namespace ordfa
