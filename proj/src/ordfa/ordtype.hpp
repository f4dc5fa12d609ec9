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

#include <vector>

#include "ordfa/dfa.hpp"
#include "ordfa/ordinal.hpp"
#include "ordfa/word.hpp"

namespace ordfa {

/// One period of the loop at a recursive state q of a well-ordered automaton.
///
/// Walking the loop word u0 from q visits q_i = q.u0[0..i-1]. Within a
/// period the accepted words come in this order: the prefix u0[0..i-1] itself
/// (if q_i is final), then, when (u0)_i = 1, the words leaving through
/// q_i.0, then everything further along the loop. In a well-ordered
/// automaton q_i.1 is the sink whenever (u0)_i = 0.
struct LoopDecomposition {
  State q = 0;
  Word u0;
  std::vector<char> accept_flags;  // size |u0|
  std::vector<Ordinal> exit_types;  // size |u0|; zero at 0-positions
  Ordinal gamma;                    // type of one period
};

struct OrderTypeTable {
  std::vector<Ordinal> per_state;
  Ordinal overall;
};

/// Order type of (L(q), <_l) for every state. Requires a trim, well-ordered
/// automaton; throws kNotWellOrderedInput otherwise.
OrderTypeTable order_type(const Dfa& m);
Ordinal state_order_type(const Dfa& m, State q);

/// Decomposition of the loop at recursive state q, using an order-type table
/// already computed for m.
LoopDecomposition loop_decomposition(const Dfa& m, const Condensation& c,
                                     const OrderTypeTable& table, State q);

/// Order type of {v in L(M) : v <_l w}. `w` need not be accepted.
Ordinal rank(const Dfa& m, const Word& w);
Ordinal rank(const Dfa& m, const OrderTypeTable& table, const Word& w);

}  // namespace ordfa
