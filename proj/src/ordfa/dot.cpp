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

#include "ordfa/dot.hpp"

#include <sstream>

namespace ordfa {

std::string to_dot(const Dfa& m) {
  const auto c = condense(m);
  const auto live = live_states(m);
  std::ostringstream out;

  out << "digraph automaton {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n"
      << "  __start [shape=point, label=\"\"];\n"
      << "  __start -> q" << m.start() << ";\n";
  for (std::size_t comp = c.components.size(); comp-- > 0;) {
    out << "  subgraph cluster_c" << comp << " {\n"
        << "    label=\"C" << comp << " h=" << c.height_of[c.components[comp].front()]
        << "\";\n"
        << "    style=" << (c.nontrivial[comp] ? "solid" : "dotted") << ";\n";
    for (State q : c.components[comp]) {
      out << "    q" << q << " [label=\"" << q << "\"";
      if (m.is_final(q)) out << ", shape=doublecircle";
      if (!live[q]) out << ", style=filled, fillcolor=lightgray";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (State q = 0; q < m.state_count(); ++q) {
    if (m.next(q, 0) == m.next(q, 1)) {
      out << "  q" << q << " -> q" << m.next(q, 0) << " [label=\"0,1\"];\n";
      continue;
    }
    for (Letter b : {0, 1}) {
      out << "  q" << q << " -> q" << m.next(q, b) << " [label=\"" << b << "\"];\n";
    }
  }
  out << "}\n";

  out << "digraph condensation {\n"
      << "  node [shape=box];\n";
  for (std::size_t comp = c.components.size(); comp-- > 0;) {
    out << "  c" << comp << " [label=\"C" << comp << " {";
    const auto& members = c.components[comp];
    for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i];
    out << "} h=" << c.height_of[members.front()] << "\"";
    if (c.nontrivial[comp]) out << ", peripheries=2";
    out << "];\n";
  }
  for (auto [from, to] : c.dag_edges) out << "  c" << from << " -> c" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ordfa
