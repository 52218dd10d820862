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

#include <gtest/gtest.h>

#include <random>

namespace endoclass {
namespace {

TEST(GF2PolyTest, BasicsAndFormatting) {
  EXPECT_TRUE(GF2Poly().is_zero());
  EXPECT_EQ(GF2Poly().degree(), -1);
  EXPECT_EQ(GF2Poly::One().ToString(), "1");
  EXPECT_EQ(GF2Poly::FromCode(0b1011).ToString(), "X^3+X+1");
  EXPECT_EQ(GF2Poly::Monomial(70).degree(), 70);
  EXPECT_EQ(GF2Poly::FromCode(0b10).ToString("x"), "x");
}

TEST(GF2PolyTest, MultiplyAndDivide) {
  const GF2Poly a = GF2Poly::FromCode(0b111);  // X^2+X+1
  const GF2Poly b = GF2Poly::FromCode(0b11);   // X+1
  EXPECT_EQ(a * b, GF2Poly::FromCode(0b1001));  // X^3+1
  const auto [quo, rem] = GF2Poly::FromCode(0b1001).DivMod(b);
  EXPECT_EQ(quo, a);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_THROW(a.DivMod(GF2Poly()), std::domain_error);
}

TEST(GF2PolyTest, RandomDivModIdentity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    GF2Poly a = GF2Poly::FromCode(rng()) * GF2Poly::FromCode(rng() >> 20);
    GF2Poly b = GF2Poly::FromCode((rng() >> 40) | 1);
    const auto [q, r] = a.DivMod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(GF2PolyTest, GcdOfProducts) {
  const GF2Poly g = GF2Poly::FromCode(0b1011);
  const GF2Poly a = g * GF2Poly::FromCode(0b110);
  const GF2Poly b = g * GF2Poly::FromCode(0b111);
  EXPECT_EQ(Gcd(a, b), g);
}

TEST(GF2PolyTest, OddEvenSplitReconstructs) {
  std::mt19937_64 rng(11);
  const GF2Poly x = GF2Poly::Monomial(1);
  for (int i = 0; i < 200; ++i) {
    const GF2Poly p = GF2Poly::FromCode(rng());
    const auto s = p.SplitOddEven();
    EXPECT_EQ(x * s.odd_root.Square() + s.even_root.Square(), p);
    EXPECT_EQ(p.has_odd_degree_term(), !s.odd_root.is_zero());
    EXPECT_EQ(p.SquareRoot().has_value(), s.odd_root.is_zero());
  }
}

TEST(GF2PolyTest, OrderingIsDegreeThenBits) {
  EXPECT_LT(GF2Poly::FromCode(0b111), GF2Poly::FromCode(0b1000));
  EXPECT_LT(GF2Poly::FromCode(0b101), GF2Poly::FromCode(0b110));
  EXPECT_LT(GF2Poly(), GF2Poly::One());
}

}  // namespace
}  // namespace endoclass
