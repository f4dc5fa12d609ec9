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

#include "ordfa/dfa.hpp"
#include "ordfa/ordinal.hpp"

namespace ordfa {

/// Empty language: a single non-final state looping on both letters.
Dfa synth_zero();
/// {eps}: a final start state whose transitions both go to a sink.
Dfa synth_one();

/// Language 0 L(m1) + 1 L(m2), order type a + b. A fresh non-final start
/// branches to disjoint copies of m1 (letter 0) and m2 (letter 1); the result
/// is trimmed, which merges the two sinks.
Dfa synth_sum(const Dfa& m1, const Dfa& m2);

/// Language 1^n 0 L(m), order type a * w. Throws kEmptyLanguage if L(m) is
/// empty.
Dfa synth_mul_omega(const Dfa& m);

/// Upper bound on the state count of synth(a), checked before building.
inline constexpr std::size_t kMaxSynthStates = 1u << 20;

/// A trim automaton of order type a: w^k is k-fold x w of {eps}, c copies of
/// each w^k are summed, and terms are summed highest exponent first. The
/// state count is max(1, sum over k of c_k (k + 2)).
Dfa synth(const Ordinal& a);

}  // namespace ordfa
