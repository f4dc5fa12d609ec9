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

#include <string>

#include "ordfa/dfa.hpp"

namespace ordfa {

/// Graphviz text with two graphs: the automaton, with strong components as
/// clusters, finals as double circles and empty-language states shaded; then
/// the condensation DAG labelled with members and heights.
std::string to_dot(const Dfa& m);

}  // namespace ordfa
