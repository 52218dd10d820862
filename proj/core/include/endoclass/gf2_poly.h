// Copyright 2026 The endoclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENDOCLASS_GF2_POLY_H_
#define ENDOCLASS_GF2_POLY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace endoclass {

// Polynomial over F_2 stored as a packed bit vector, bit i = coefficient of
// X^i. The word vector never carries trailing zero words, so equality and
// ordering are plain word comparisons.
class GF2Poly {
 public:
  GF2Poly() = default;

  static GF2Poly Zero() { return GF2Poly(); }
  static GF2Poly One() { return FromCode(1); }
  static GF2Poly Monomial(int degree);
  // Bit pattern of `code` read as coefficients (bit 0 = constant term).
  static GF2Poly FromCode(std::uint64_t code);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  // -1 for the zero polynomial.
  int degree() const;
  bool coefficient(int i) const;
  void set_coefficient(int i, bool value);

  GF2Poly& operator+=(const GF2Poly& other);
  friend GF2Poly operator+(GF2Poly lhs, const GF2Poly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend GF2Poly operator*(const GF2Poly& lhs, const GF2Poly& rhs);
  GF2Poly& operator*=(const GF2Poly& other) {
    *this = *this * other;
    return *this;
  }
  GF2Poly ShiftLeft(int n) const;

  // Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<GF2Poly, GF2Poly> DivMod(const GF2Poly& divisor) const;
  GF2Poly Square() const;

  // Splits p = X*odd(X)^2 + even(X)^2. Over F_2 every polynomial has this
  // form since (sum c_i X^i)^2 = sum c_i X^(2i).
  struct OddEvenSplit;
  OddEvenSplit SplitOddEven() const;
  bool has_odd_degree_term() const;
  // r with r^2 == *this, if one exists (exactly when no odd-degree term).
  std::optional<GF2Poly> SquareRoot() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const GF2Poly&, const GF2Poly&) = default;
  // Degree first, then coefficients from the top: the numeric order of the
  // coefficient bit pattern.
  friend std::strong_ordering operator<=>(const GF2Poly& lhs,
                                          const GF2Poly& rhs);

  // "0", "1", "X", "X^3+X+1"; the variable name is configurable.
  std::string ToString(const std::string& variable = "X") const;

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

struct GF2Poly::OddEvenSplit {
  GF2Poly odd_root;
  GF2Poly even_root;
};

GF2Poly Gcd(GF2Poly a, GF2Poly b);

}  // namespace endoclass

#endif  // ENDOCLASS_GF2_POLY_H_
