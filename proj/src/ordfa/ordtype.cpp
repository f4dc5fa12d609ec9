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

#include "ordfa/ordtype.hpp"

#include "ordfa/error.hpp"
#include "ordfa/wellorder.hpp"

namespace ordfa {

namespace {

void require_ordinal_dfa(const Dfa& m) {
  CheckResult r;
  try {
    r = check(m);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotWellOrderedInput, std::string("input rejected: ") + e.what());
  }
  if (!r.well_ordered()) {
    throw Error(ErrorCode::kNotWellOrderedInput,
                "language is not well-ordered (state " + std::to_string(r.witness->q) +
                    " loops on 0 and exits on 1)");
  }
}

// Decomposition against a table whose lower components are filled in.
LoopDecomposition decompose(const Dfa& m, const Condensation& c,
                            const std::vector<Ordinal>& types, State q) {
  LoopDecomposition d;
  d.q = q;
  d.u0 = loop_word(m, c, q);
  const std::size_t comp = c.component_of[q];
  State p = q;
  for (std::size_t i = 0; i < d.u0.size(); ++i) {
    d.accept_flags.push_back(m.is_final(p) ? 1 : 0);
    Ordinal exit;
    if (d.u0[i] == 1) {
      const State out = m.next(p, 0);
      if (c.component_of[out] >= comp) {
        throw Error(ErrorCode::kNotSimpleCycle,
                    "exit from state " + std::to_string(p) + " does not leave its component");
      }
      exit = types[out];
    }
    d.gamma = d.gamma + Ordinal(d.accept_flags.back()) + exit;
    d.exit_types.push_back(std::move(exit));
    p = m.next(p, d.u0[i]);
  }
  return d;
}

}  // namespace

OrderTypeTable order_type(const Dfa& m) {
  require_ordinal_dfa(m);
  const auto c = condense(m);
  const auto sink = sink_of(m);
  std::vector<Ordinal> types(m.state_count());

  // Component ids increase bottom-up, so every successor outside a component
  // is already typed when the component is reached.
  for (std::size_t comp = 0; comp < c.components.size(); ++comp) {
    for (State q : c.components[comp]) {
      if (sink && q == *sink) continue;
      if (c.nontrivial[comp]) {
        types[q] = ord_mul_omega(decompose(m, c, types, q).gamma);
      } else {
        types[q] = Ordinal(m.is_final(q) ? 1 : 0) + types[m.next(q, 0)] + types[m.next(q, 1)];
      }
    }
  }
  Ordinal overall = types[m.start()];
  return OrderTypeTable{std::move(types), std::move(overall)};
}

Ordinal state_order_type(const Dfa& m, State q) {
  if (q >= m.state_count()) {
    throw Error(ErrorCode::kInvalidArgument, "state " + std::to_string(q) + " out of range");
  }
  return order_type(m).per_state[q];
}

LoopDecomposition loop_decomposition(const Dfa& m, const Condensation& c,
                                     const OrderTypeTable& table, State q) {
  return decompose(m, c, table.per_state, q);
}

Ordinal rank(const Dfa& m, const OrderTypeTable& table, const Word& w) {
  Ordinal r;
  State p = m.start();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (m.is_final(p)) r = r + Ordinal(1);
    if (w[i] == 1) r = r + table.per_state[m.next(p, 0)];
    p = m.next(p, w[i]);
  }
  return r;
}

Ordinal rank(const Dfa& m, const Word& w) { return rank(m, order_type(m), w); }

}  // namespace ordfa
