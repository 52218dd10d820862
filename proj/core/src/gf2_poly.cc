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

#include "endoclass/gf2_poly.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace endoclass {

GF2Poly GF2Poly::Monomial(int degree) {
  GF2Poly p;
  p.set_coefficient(degree, true);
  return p;
}

GF2Poly GF2Poly::FromCode(std::uint64_t code) {
  GF2Poly p;
  if (code != 0) p.words_.push_back(code);
  return p;
}

int GF2Poly::degree() const {
  if (words_.empty()) return -1;
  const std::uint64_t top = words_.back();
  return static_cast<int>(64 * (words_.size() - 1)) + 63 -
         std::countl_zero(top);
}

bool GF2Poly::coefficient(int i) const {
  if (i < 0) return false;
  const std::size_t word = static_cast<std::size_t>(i) / 64;
  if (word >= words_.size()) return false;
  return (words_[word] >> (i % 64)) & 1U;
}

void GF2Poly::set_coefficient(int i, bool value) {
  if (i < 0) throw std::out_of_range("negative exponent");
  const std::size_t word = static_cast<std::size_t>(i) / 64;
  if (word >= words_.size()) {
    if (!value) return;
    words_.resize(word + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[word] |= mask;
  } else {
    words_[word] &= ~mask;
    Trim();
  }
}

void GF2Poly::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

GF2Poly& GF2Poly::operator+=(const GF2Poly& other) {
  if (other.words_.size() > words_.size()) {
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  Trim();
  return *this;
}

GF2Poly GF2Poly::ShiftLeft(int n) const {
  if (is_zero() || n == 0) return *this;
  const std::size_t word_shift = static_cast<std::size_t>(n) / 64;
  const int bit_shift = n % 64;
  GF2Poly out;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift != 0) {
      out.words_[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
    }
  }
  out.Trim();
  return out;
}

GF2Poly operator*(const GF2Poly& lhs, const GF2Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return GF2Poly();
  const GF2Poly& small = lhs.degree() <= rhs.degree() ? lhs : rhs;
  const GF2Poly& large = &small == &lhs ? rhs : lhs;
  GF2Poly out;
  out.words_.assign(lhs.words_.size() + rhs.words_.size() + 1, 0);
  const int n = small.degree();
  for (int i = 0; i <= n; ++i) {
    if (!small.coefficient(i)) continue;
    const std::size_t word_shift = static_cast<std::size_t>(i) / 64;
    const int bit_shift = i % 64;
    for (std::size_t j = 0; j < large.words_.size(); ++j) {
      out.words_[j + word_shift] ^= large.words_[j] << bit_shift;
      if (bit_shift != 0) {
        out.words_[j + word_shift + 1] ^= large.words_[j] >> (64 - bit_shift);
      }
    }
  }
  out.Trim();
  return out;
}

std::pair<GF2Poly, GF2Poly> GF2Poly::DivMod(const GF2Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("GF2Poly division by zero");
  GF2Poly quotient;
  GF2Poly remainder = *this;
  const int dd = divisor.degree();
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    const int shift = remainder.degree() - dd;
    quotient.set_coefficient(shift, true);
    remainder += divisor.ShiftLeft(shift);
  }
  return {quotient, remainder};
}

GF2Poly GF2Poly::Square() const {
  GF2Poly out;
  const int n = degree();
  for (int i = 0; i <= n; ++i) {
    if (coefficient(i)) out.set_coefficient(2 * i, true);
  }
  return out;
}

GF2Poly::OddEvenSplit GF2Poly::SplitOddEven() const {
  OddEvenSplit split;
  const int n = degree();
  for (int i = 0; i <= n; ++i) {
    if (!coefficient(i)) continue;
    if (i % 2 == 1) {
      split.odd_root.set_coefficient((i - 1) / 2, true);
    } else {
      split.even_root.set_coefficient(i / 2, true);
    }
  }
  return split;
}

bool GF2Poly::has_odd_degree_term() const {
  constexpr std::uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAULL;
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return (w & kOddBits) != 0; });
}

std::optional<GF2Poly> GF2Poly::SquareRoot() const {
  if (has_odd_degree_term()) return std::nullopt;
  return SplitOddEven().even_root;
}

std::strong_ordering operator<=>(const GF2Poly& lhs, const GF2Poly& rhs) {
  if (lhs.words_.size() != rhs.words_.size()) {
    return lhs.words_.size() <=> rhs.words_.size();
  }
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (lhs.words_[i] != rhs.words_[i]) return lhs.words_[i] <=> rhs.words_[i];
  }
  return std::strong_ordering::equal;
}

std::string GF2Poly::ToString(const std::string& variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += variable;
    } else {
      out += variable + '^' + std::to_string(i);
    }
  }
  return out;
}

GF2Poly Gcd(GF2Poly a, GF2Poly b) {
  while (!b.is_zero()) {
    GF2Poly r = a.DivMod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace endoclass
