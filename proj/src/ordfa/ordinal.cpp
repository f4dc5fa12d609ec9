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

#include "ordfa/ordinal.hpp"

#include <cctype>

#include "ordfa/error.hpp"

namespace ordfa {

namespace {

void check_degree(std::size_t size, std::size_t max_degree) {
  if (size > max_degree) {
    throw Error(ErrorCode::kDegreeOverflow,
                "ordinal degree " + std::to_string(size - 1) + " exceeds the bound " +
                    std::to_string(max_degree - 1));
  }
}

}  // namespace

Ordinal::Ordinal(unsigned long long n) {
  if (n != 0) coeffs_.emplace_back(n);
}

Ordinal Ordinal::from_coefficients(std::vector<Natural> coeffs, std::size_t max_degree) {
  for (const auto& c : coeffs) {
    if (c < 0) throw Error(ErrorCode::kInvalidArgument, "negative ordinal coefficient");
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  check_degree(coeffs.size(), max_degree);
  Ordinal out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

Ordinal Ordinal::omega_power(std::size_t k, std::size_t max_degree) {
  check_degree(k + 1, max_degree);
  std::vector<Natural> coeffs(k + 1, 0);
  coeffs[k] = 1;
  return from_coefficients(std::move(coeffs), max_degree);
}

Natural Ordinal::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Natural(0);
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    if (a.coeffs_[k] != b.coeffs_[k]) {
      return a.coeffs_[k] < b.coeffs_[k] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b, std::size_t max_degree) {
  if (b.is_zero()) return a;
  const std::size_t d = static_cast<std::size_t>(b.degree());
  std::vector<Natural> out(b.coefficients());
  out[d] += a.coefficient(d);
  for (std::size_t k = d + 1; k < a.coefficients().size(); ++k) {
    out.push_back(a.coefficients()[k]);
  }
  return Ordinal::from_coefficients(std::move(out), max_degree);
}

Ordinal ord_mul_omega(const Ordinal& a, std::size_t max_degree) {
  if (a.is_zero()) return a;
  return Ordinal::omega_power(static_cast<std::size_t>(a.degree()) + 1, max_degree);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t max_degree)
      : text_(text), max_degree_(max_degree) {}

  Ordinal parse() {
    skip_space();
    if (at_end()) fail("empty ordinal");
    Ordinal sum = term();
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
      sum = ord_add(sum, term(), max_degree_);
    }
    return sum;
  }

 private:
  Ordinal term() {
    skip_space();
    if (at_end()) fail("expected a term");
    if (text_[pos_] == 'w') {
      ++pos_;
      std::size_t exponent = 1;
      skip_space();
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        std::size_t where = pos_;
        Natural e = integer();
        if (e >= max_degree_) {
          throw SyntaxError(ErrorCode::kDegreeOverflow,
                            "exponent at position " + std::to_string(where) +
                                " exceeds the degree bound " +
                                std::to_string(max_degree_ - 1),
                            where, 0);
        }
        exponent = static_cast<std::size_t>(e);
      }
      Natural coeff = 1;
      skip_space();
      if (!at_end() && text_[pos_] == '*') {
        ++pos_;
        coeff = integer();
      }
      std::vector<Natural> coeffs(exponent + 1, 0);
      coeffs[exponent] = coeff;
      return Ordinal::from_coefficients(std::move(coeffs), max_degree_);
    }
    return Ordinal::from_coefficients({integer()}, max_degree_);
  }

  Natural integer() {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    Natural n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_++] - '0');
    }
    return n;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& reason) {
    throw SyntaxError(ErrorCode::kSyntax,
                      reason + " at position " + std::to_string(pos_), pos_, 0);
  }

  std::string_view text_;
  std::size_t max_degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ord(std::string_view text, std::size_t max_degree) {
  return OrdinalParser(text, max_degree).parse();
}

std::string format_ord(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& c = a.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c[k].str();
      continue;
    }
    out += k == 1 ? "w" : "w^" + std::to_string(k);
    if (c[k] != 1) out += "*" + c[k].str();
  }
  return out;
}

}  // namespace ordfa
