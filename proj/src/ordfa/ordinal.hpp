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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordfa {

using Natural = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultMaxDegree = 64;

/// An ordinal below w^w in Cantor normal form:
///   w^d * c_d + ... + w * c_1 + c_0,
/// stored as the coefficient list c_0 .. c_d with c_d != 0. Zero is the empty
/// list.
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(unsigned long long n);  // NOLINT: finite ordinals convert implicitly

  /// Trailing zero coefficients are dropped. Throws kInvalidArgument on a
  /// negative coefficient and kDegreeOverflow if degree >= max_degree.
  static Ordinal from_coefficients(std::vector<Natural> coeffs,
                                   std::size_t max_degree = kDefaultMaxDegree);
  /// w^k
  static Ordinal omega_power(std::size_t k, std::size_t max_degree = kDefaultMaxDegree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_finite() const noexcept { return coeffs_.size() <= 1; }
  /// Degree of the leading term; -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of w^k (zero beyond the degree).
  Natural coefficient(std::size_t k) const;
  const std::vector<Natural>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Natural> coeffs_;
};

/// a + b. With d = degree(b): terms of a above d are kept, the w^d
/// coefficients add, and b supplies everything below d.
Ordinal ord_add(const Ordinal& a, const Ordinal& b,
                std::size_t max_degree = kDefaultMaxDegree);
/// a * w: zero stays zero, otherwise w^(degree(a)+1).
Ordinal ord_mul_omega(const Ordinal& a, std::size_t max_degree = kDefaultMaxDegree);
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

/// Grammar (whitespace-insensitive):
///   ord  := term ("+" term)* | "0"
///   term := "w^" INT ("*" INT)? | "w" ("*" INT)? | INT
/// Terms are combined with ordinal addition. Throws SyntaxError(kSyntax)
/// carrying the byte offset of the problem.
Ordinal parse_ord(std::string_view text, std::size_t max_degree = kDefaultMaxDegree);
/// Canonical form, e.g. "w^2*3 + w + 4"; "0" for zero.
std::string format_ord(const Ordinal& a);

}  // namespace ordfa
