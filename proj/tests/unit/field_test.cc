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

#include "endoclass/field.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

namespace endoclass {
namespace {

std::vector<std::string> Strings(const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.ToString());
  return out;
}

const std::vector<std::string>& SmallFiniteSpecs() {
  static const std::vector<std::string> specs = {
      "F2", "F3", "F4", "F5", "F7", "F8", "F9", "F11", "F13", "F16",
      "F25", "F27", "F32", "F49"};
  return specs;
}

TEST(FieldTest, PrimeArithmetic) {
  const Field f = Field::Parse("F5");
  EXPECT_EQ(f.FromInteger(3) + f.FromInteger(4), f.FromInteger(2));
  EXPECT_EQ(f.FromInteger(2).inverse(), f.FromInteger(3));
  EXPECT_EQ((-f.one()).ToString(), "4");
}

TEST(FieldTest, ExtensionReducesByModulus) {
  const Field f = Field::Parse("F2^2/x^2+x+1");
  const FieldElement w = f.Generator();
  EXPECT_EQ((w * w).ToString(), "w+1");
  EXPECT_EQ(f.ParseElement("ω*ω"), f.ParseElement("w+1"));
}

TEST(FieldTest, RationalsReduce) {
  const Field q = Field::Parse("Q");
  EXPECT_EQ((q.FromFraction(2, 3) * q.FromFraction(9, 4)).ToString(), "3/2");
  EXPECT_EQ(q.FromFraction(4, -6).ToString(), "-2/3");
  EXPECT_EQ(q.characteristic(), 0U);
  EXPECT_EQ(q.ParseElement("123456789012345678901234567890/10").ToString(),
            "12345678901234567890123456789");
}

TEST(FieldTest, EnumerationOrder) {
  EXPECT_EQ(Strings(Field::Parse("F2").Elements()),
            (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(Strings(Field::Parse("F3").Elements()),
            (std::vector<std::string>{"0", "1", "2"}));
  EXPECT_EQ(Strings(Field::Parse("F4").Elements()),
            (std::vector<std::string>{"0", "1", "w", "w+1"}));
  EXPECT_THROW(Field::Parse("Q").Elements(), UnsupportedError);
  EXPECT_THROW(Field::Parse("F2(X)").order(), UnsupportedError);
}

TEST(FieldTest, DefaultModuli) {
  EXPECT_EQ(Field::Parse("F4").spec(), "F2^2/x^2+x+1");
  EXPECT_EQ(Field::Parse("F8").spec(), "F2^3/x^3+x+1");
  EXPECT_EQ(Field::Parse("F9").spec(), "F3^2/x^2+1");
  EXPECT_EQ(Field::Parse("F16").spec(), "F2^4/x^4+x+1");
  EXPECT_EQ(Field::Parse("F9"), Field::Parse("F3^2/x^2+1"));
  EXPECT_FALSE(Field::Parse("F8") == Field::Parse("F2^3/x^3+x^2+1"));
}

TEST(FieldTest, SpecRoundTrip) {
  for (const auto& s : SmallFiniteSpecs()) {
    const Field f = Field::Parse(s);
    EXPECT_EQ(Field::Parse(f.spec()), f) << s;
    for (const auto& e : f.Elements()) {
      EXPECT_EQ(f.ParseElement(e.ToString()), e) << s << " " << e.ToString();
    }
  }
}

TEST(FieldTest, RejectsInvalidDescriptors) {
  EXPECT_THROW(Field::Make(FieldDescriptor::Prime(6)), FieldError);
  EXPECT_THROW(Field::Make(FieldDescriptor::Prime(101)), FieldError);
  EXPECT_THROW(Field::Parse("F2^2/x^2+1"), FieldError);  // (x+1)^2
  EXPECT_THROW(Field::Make(FieldDescriptor::Extension(2, {1})), FieldError);
  EXPECT_THROW(Field::Parse("F2^9"), FieldError);
  EXPECT_THROW(Field::Parse("F6"), FieldError);
  EXPECT_THROW(Field::Parse("G5"), FieldError);
  EXPECT_THROW(Field::Parse("F4^2/x^2+x+1"), FieldError);
}

TEST(FieldTest, ErrorsOnMisuse) {
  const Field f5 = Field::Parse("F5");
  const Field f7 = Field::Parse("F7");
  EXPECT_THROW(f5.zero().inverse(), std::domain_error);
  EXPECT_THROW(f5.one() / f5.zero(), std::domain_error);
  EXPECT_THROW(f5.one() + f7.one(), FieldMismatchError);
  EXPECT_FALSE(f5.one() == f7.one());
  EXPECT_THROW(f5.ParseElement("X"), FieldError);
  EXPECT_THROW(f5.ParseElement("1/0"), FieldError);
}

TEST(FieldTest, SquaresWithWitnesses) {
  const Field f7 = Field::Parse("F7");
  const SquareResult two = f7.IsSquare(f7.FromInteger(2));
  ASSERT_TRUE(two.is_square());
  EXPECT_EQ(*two.witness * *two.witness, f7.FromInteger(2));
  EXPECT_FALSE(f7.IsSquare(f7.FromInteger(3)).is_square());

  const Field q = Field::Parse("Q");
  const SquareResult r = q.IsSquare(q.FromFraction(4, 9));
  ASSERT_TRUE(r.is_square());
  EXPECT_EQ(r.witness->ToString(), "2/3");
  EXPECT_FALSE(q.IsSquare(q.FromInteger(-4)).is_square());

  const Field f4 = Field::Parse("F4");
  const SquareResult w = f4.IsSquare(f4.Generator());
  ASSERT_TRUE(w.is_square());
  EXPECT_EQ(w.witness->ToString(), "w+1");
  EXPECT_TRUE(f7.IsSquare(f7.zero()).is_square());
}

// Oracle: the set of nonzero squares by enumeration.
TEST(FieldTest, IsSquareMatchesEnumeratedSquares) {
  for (const auto& s : SmallFiniteSpecs()) {
    const Field f = Field::Parse(s);
    std::set<std::uint32_t> squares;
    for (const auto& x : f.NonzeroElements()) squares.insert((x * x).code());
    for (const auto& t : f.NonzeroElements()) {
      const SquareResult r = f.IsSquare(t);
      EXPECT_EQ(r.is_square(), squares.count(t.code()) == 1) << s;
      if (r.is_square()) EXPECT_EQ(*r.witness * *r.witness, t);
    }
  }
}

// Frozen from tests/oracle/expected.json ("nonzero_squares" codes).
TEST(FieldTest, FrozenSquareSets) {
  const std::map<std::string, std::vector<std::uint32_t>> expected = {
      {"F5", {1, 4}}, {"F7", {1, 2, 4}}, {"F9", {1, 2, 3, 6}}};
  for (const auto& [spec, codes] : expected) {
    const Field f = Field::Parse(spec);
    std::vector<std::uint32_t> got;
    for (const auto& t : f.NonzeroElements()) {
      if (f.IsSquare(t).is_square()) got.push_back(t.code());
    }
    EXPECT_EQ(got, codes) << spec;
  }
}

TEST(FieldTest, RationalSquaresAgreeWithSquarefreeParts) {
  const Field q = Field::Parse("Q");
  for (std::int64_t n = 1; n <= 120; ++n) {
    for (std::int64_t d = 1; d <= 40; ++d) {
      const FieldElement t = q.FromFraction(n, d);
      const auto [num, den] = t.rational();
      const bool oracle = SquarefreePart(std::stoull(num)) == 1 &&
                          SquarefreePart(std::stoull(den)) == 1;
      EXPECT_EQ(q.IsSquare(t).is_square(), oracle) << n << "/" << d;
    }
  }
}

TEST(FieldTest, RationalBoundReportsUndecided) {
  const Field q = Field::Parse("Q");
  SquareOptions small;
  small.rational_bound = 100;
  EXPECT_EQ(q.IsSquare(q.FromInteger(1000), small).decision,
            Decision::kUndecided);
  EXPECT_EQ(q.IsSquare(q.FromInteger(49), small).decision, Decision::kYes);
  EXPECT_EQ(q.IsSquare(q.ParseElement("2^70")).decision, Decision::kUndecided);
}

TEST(FieldTest, RationalFunctions) {
  const Field f = Field::Parse("F2(X)");
  const FieldElement t = f.ParseElement("(X^3+X^2)/(X+1)^2");
  EXPECT_EQ(t.ToString(), "X^2/(X+1)");
  EXPECT_EQ(f.ParseElement("1/(X+1)+X").ToString(), "(X^2+X+1)/(X+1)");
  EXPECT_EQ(t * t.inverse(), f.one());
  EXPECT_EQ(t + t, f.zero());
  const SquareResult r = f.IsSquare(f.ParseElement("X^2+1"));
  ASSERT_TRUE(r.is_square());
  EXPECT_EQ(r.witness->ToString(), "X+1");
  EXPECT_FALSE(f.IsSquare(f.Generator()).is_square());
}

TEST(FieldTest, SquarefreePartOracle) {
  EXPECT_EQ(SquarefreePart(1), 1U);
  EXPECT_EQ(SquarefreePart(12), 3U);
  EXPECT_EQ(SquarefreePart(72), 2U);
  EXPECT_EQ(SquarefreePart(30), 30U);
  EXPECT_TRUE(IsPrime(97));
  EXPECT_FALSE(IsPrime(91));
}

template <typename Gen>
void CheckAxioms(const Field& f, Gen&& gen, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    const FieldElement a = gen(), b = gen(), c = gen();
    ASSERT_EQ((a + b) + c, a + (b + c)) << f.spec();
    ASSERT_EQ((a * b) * c, a * (b * c)) << f.spec();
    ASSERT_EQ(a * (b + c), a * b + a * c) << f.spec();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, f.zero());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), f.one()) << f.spec();
  }
}

TEST(FieldTest, AxiomsOnRandomElements) {
  std::mt19937 rng(2026);
  for (const auto& s : {"F2", "F5", "F9", "F16", "F49", "F97", "F256"}) {
    const Field f = Field::Parse(s);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    CheckAxioms(f, [&] { return f.FromCode(pick(rng)); }, 2000);
    FieldElement sum = f.zero();
    for (std::uint32_t i = 0; i < f.characteristic(); ++i) sum += f.one();
    EXPECT_TRUE(sum.is_zero()) << s;
  }
  const Field q = Field::Parse("Q");
  std::uniform_int_distribution<int> small(-50, 50);
  CheckAxioms(q, [&] {
    int d = small(rng);
    return q.FromFraction(small(rng), d == 0 ? 1 : d);
  }, 500);
  const Field r = Field::Parse("F2(X)");
  std::uniform_int_distribution<std::uint64_t> poly(0, 255);
  CheckAxioms(r, [&] {
    return r.FromRationalFunction(GF2Poly::FromCode(poly(rng)),
                                  GF2Poly::FromCode(poly(rng) | 1));
  }, 300);
}

TEST(FieldTest, FromIntegerIsCanonical) {
  for (const auto& s : {"F3", "F7", "F9", "F8"}) {
    const Field f = Field::Parse(s);
    const std::int64_t p = f.characteristic();
    for (std::int64_t n = -40; n <= 40; ++n) {
      EXPECT_EQ(f.FromInteger(n), f.FromInteger(((n % p) + p) % p));
    }
  }
}

}  // namespace
}  // namespace endoclass
