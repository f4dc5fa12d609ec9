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
#include <optional>
#include <string>

#include "ordfa/dfa.hpp"
#include "ordfa/word.hpp"

namespace ordfa {

/// Certificate that L(M) is not well-ordered: start.x = q, q.0u = q and
/// q.1v is final, so the words x (0u)^n 1v form a strictly descending chain
/// inside L(M).
struct Witness {
  Word x;
  Word u;
  Word v;
  State q = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::optional<Witness> witness;  // absent iff well-ordered
  bool well_ordered() const noexcept { return !witness.has_value(); }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Decides whether (L(M), <_l) is well-ordered. Throws kNotTrim if M is not
/// trim. A failing state is one that is not the sink, shares its strong
/// component with q.0 and whose 1-successor is not the sink; the witness is
/// built for the least failing state from shortest words (0 before 1).
CheckResult check(const Dfa& m);

/// x (0u)^n 1 v
Word witness_chain(const Witness& w, std::size_t n);

struct WitnessVerification {
  bool ok = true;
  std::optional<std::size_t> failed_at;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks that chain(n) is accepted and chain(n+1) <_s chain(n) for all
/// 0 <= n < upto.
WitnessVerification verify_witness(const Dfa& m, const Witness& w, std::size_t upto);

/// Throws kNotTrim with a diagnostic unless m is trim.
void require_trim(const Dfa& m);

}  // namespace ordfa
