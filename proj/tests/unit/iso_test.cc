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

#include "endoclass/iso.h"

#include <gtest/gtest.h>

#include <random>

#include "endoclass/classify.h"

namespace endoclass {
namespace {

SParams S(const Field& f, std::int64_t p, std::int64_t q, std::int64_t a,
          std::int64_t b, std::int64_t c, std::int64_t d) {
  return SParams::FromIntegers(f, p, q, a, b, c, d);
}

Transform T(const Field& f, std::int64_t x, std::int64_t y, std::int64_t z,
            std::int64_t w) {
  return {f.FromInteger(x), f.FromInteger(y), f.FromInteger(z),
          f.FromInteger(w)};
}

std::vector<std::vector<std::int64_t>> Rows(const LiftedTransform& m) {
  std::vector<std::vector<std::int64_t>> out(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i].push_back(m.at(i, j).code());
  }
  return out;
}

TEST(IsoTest, LiftExamples) {
  const Field f = Field::Parse("F5");
  EXPECT_EQ(Lift(Transform::Identity(f)), LiftedTransform::Identity(f));
  using R = std::vector<std::vector<std::int64_t>>;
  EXPECT_EQ(Rows(Lift(T(f, 0, 1, 1, 0))),
            (R{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  EXPECT_EQ(Rows(Lift(T(f, 2, 0, 0, 1))),
            (R{{4, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  EXPECT_THROW(Lift(T(f, 1, 2, 2, 4)), DomainError);
}

TEST(IsoTest, LiftIsAHomomorphismOverF3) {
  const Field f = Field::Parse("F3");
  const auto gl = GeneralLinearGroup(f);
  ASSERT_EQ(gl.size(), 48u);
  for (const auto& x : gl) {
    for (const auto& y : gl) {
      ASSERT_EQ(Lift(x * y), Lift(x) * Lift(y));
    }
  }
}

TEST(IsoTest, LiftIsAHomomorphismOnRandomF5) {
  const Field f = Field::Parse("F5");
  const auto gl = GeneralLinearGroup(f);
  ASSERT_EQ(gl.size(), 480u);
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, gl.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const Transform& x = gl[pick(rng)];
    const Transform& y = gl[pick(rng)];
    ASSERT_EQ(Lift(x * y), Lift(x) * Lift(y));
    ASSERT_EQ(Lift(x).Inverse(), Lift(x.inverse()));
  }
}

TEST(IsoTest, TransformExamples) {
  const Field f = Field::Parse("F5");
  const StructureMatrix a = S(f, 0, 1, 1, 0, -1, 2).to_structure_matrix();
  EXPECT_EQ(Transformed(a, Transform::Identity(f)), a);
  EXPECT_EQ(Transformed(S(f, 0, 4, 4, 0, -4, 4).to_structure_matrix(),
                        T(f, 1, 1, 0, 4)),
            a);
  EXPECT_THROW(Transformed(a, T(f, 0, 0, 0, 0)), DomainError);
  EXPECT_THROW(Transformed(a, Transform::Identity(Field::Parse("F7"))),
               FieldMismatchError);
}

TEST(IsoTest, TransformComposes) {
  const Field f = Field::Parse("F5");
  const auto gl = GeneralLinearGroup(f);
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, gl.size() - 1);
  std::uniform_int_distribution<std::uint32_t> el(0, 4);
  for (int i = 0; i < 300; ++i) {
    std::array<StructureMatrix::Row, 4> rows;
    for (auto& r : rows) r = {f.FromCode(el(rng)), f.FromCode(el(rng))};
    const StructureMatrix a(rows);
    const Transform& x = gl[pick(rng)];
    const Transform& y = gl[pick(rng)];
    ASSERT_EQ(Transformed(Transformed(a, x), y), Transformed(a, x * y));
    ASSERT_TRUE(MapsTo(a, x, Transformed(a, x)));
  }
}

TEST(IsoTest, IsoSystemExamples) {
  const Field f = Field::Parse("F5");
  // t = 2: (t+1)/4 = 2, 1/2 = 3, 1/(2t) = 4, (1+t)/(4t) = 1.
  const SParams s = S(f, 0, 2, 2, 0, -2, 1);
  const SParams s_prime = S(f, 0, 2, 2, 0, -2, 0);
  const Transform x{f.FromFraction(1, 2), f.FromFraction(1, 4), f.zero(),
                    f.FromFraction(3, 8)};
  EXPECT_TRUE(CheckIsoSystem(s, s_prime, x));
  EXPECT_TRUE(CheckIsoSystem(s, s, Transform::Identity(f)));
  EXPECT_FALSE(CheckIsoSystem(s, s_prime, Transform::Identity(f)));
  const SParams u = S(f, 0, -1, 1, 1, -1, 0);
  EXPECT_TRUE(CheckIsoSystem(u, u, Transform::Identity(f)));
}

TEST(IsoTest, IsoSystemMatchesTransform) {
  for (const auto* spec : {"F3", "F5"}) {
    const Field f = Field::Parse(spec);
    const auto gl = GeneralLinearGroup(f);
    const std::uint32_t q = f.order();
    std::mt19937 rng(q);
    std::uniform_int_distribution<std::uint32_t> el(0, q - 1);
    std::uniform_int_distribution<std::size_t> pick(0, gl.size() - 1);
    auto rand_s = [&] {
      return SParams{f.FromCode(el(rng)), f.FromCode(el(rng)),
                     f.FromCode(el(rng)), f.FromCode(el(rng)),
                     f.FromCode(el(rng)), f.FromCode(el(rng))};
    };
    int hits = 0;
    for (int i = 0; i < 2000; ++i) {
      const SParams s = rand_s();
      const Transform& x = gl[pick(rng)];
      // Half the pairs are built to match so both outcomes are exercised.
      SParams t = rand_s();
      if (i % 2 == 0) {
        if (auto sf = AsStraightForm(Transformed(s.to_structure_matrix(), x))) {
          t = *sf;
        }
      }
      const bool eq = Transformed(s.to_structure_matrix(), x) ==
                      t.to_structure_matrix();
      hits += eq;
      ASSERT_EQ(CheckIsoSystem(s, t, x), eq) << s.ToString() << t.ToString();
    }
    EXPECT_GT(hits, 0);
  }
}

TEST(IsoTest, AreIsomorphicExamples) {
  const Field f = Field::Parse("F5");
  const StructureMatrix a = S(f, 0, 1, 1, 0, -1, 2).to_structure_matrix();
  EXPECT_EQ(AreIsomorphic(a, a), Transform::Identity(f));
  EXPECT_FALSE(AreIsomorphic(a, S(f, 0, 4, -4, -4, 4, 0).to_structure_matrix()));
  const StructureMatrix b = S(f, 0, -4, 4, 4, -4, 0).to_structure_matrix();
  const StructureMatrix c = S(f, 0, 4, -4, -4, 4, 0).to_structure_matrix();
  // -4 = 1 and 4 = -1 in F5, so these are the t = 4 member of the S3 family
  // and S(0,4,-4,-4,4,0) itself, which sits at t = -4 outside that family.
  EXPECT_FALSE(AreIsomorphic(b, c));
  EXPECT_FALSE(AreIsomorphic(c, b));
  EXPECT_FALSE(AreIsomorphic(a, StructureMatrix::Zero(f)));
  EXPECT_THROW(AreIsomorphic(StructureMatrix::Zero(Field::Parse("Q")),
                             StructureMatrix::Zero(Field::Parse("Q"))),
               UnsupportedError);
}

TEST(IsoTest, ParallelSearchMatchesSerial) {
  const Field f = Field::Parse("F7");
  const StructureMatrix a = S(f, 0, 1, 1, 0, -1, 2).to_structure_matrix();
  for (const auto& x : {T(f, 3, 1, 2, 5), T(f, 0, 6, 1, 4), T(f, 2, 0, 0, 3)}) {
    const StructureMatrix b = Transformed(a, x);
    EXPECT_EQ(AreIsomorphic(a, b, {1}), AreIsomorphic(a, b, {4}));
  }
}

class Ii1OverF3 : public ::testing::Test {
 protected:
  static std::vector<SParams> Members() {
    const Field f = Field::Parse("F3");
    std::vector<SParams> out;
    for (const auto& s : ScanEndoCommutative(f, AlgebraType::kII1)) {
      out.push_back(s);
    }
    return out;
  }
};

// Symmetry and transitivity over every pair and triple of II1 algebras.
TEST_F(Ii1OverF3, IsomorphismIsAnEquivalence) {
  const auto members = Members();
  ASSERT_EQ(members.size(), 16u);
  const std::size_t n = members.size();
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      iso[i][j] = AreIsomorphic(members[i].to_structure_matrix(),
                                members[j].to_structure_matrix())
                      .has_value();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(iso[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(iso[i][j], iso[j][i]);
      for (std::size_t k = 0; k < n; ++k) {
        if (iso[i][j] && iso[j][k]) EXPECT_TRUE(iso[i][k]);
      }
    }
  }
}

TEST(IsoTest, RankIsInvariantOverF3) {
  const Field f = Field::Parse("F3");
  const auto ec = ScanEndoCommutative(f, std::nullopt);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ec.size(); ++i) {
    for (std::size_t j = i + 1; j < ec.size(); ++j) {
      if (!AreIsomorphic(ec[i].to_structure_matrix(), ec[j].to_structure_matrix())) {
        continue;
      }
      ++pairs;
      EXPECT_EQ(Rank(ec[i].to_structure_matrix()), Rank(ec[j].to_structure_matrix()));
    }
  }
  EXPECT_GT(pairs, 0u);
}

// The type is read off one straight form, and an algebra has several.
TEST(IsoTest, TypeDependsOnTheStraightForm) {
  const Field f = Field::Parse("F3");
  const SParams ii1 = S(f, 0, 1, 2, 0, 2, 0);
  const SParams i100 = S(f, 1, 0, 0, 0, 0, 0);
  const auto x = AreIsomorphic(ii1.to_structure_matrix(), i100.to_structure_matrix());
  ASSERT_TRUE(x);
  EXPECT_TRUE(CheckIsoSystem(ii1, i100, *x));
  EXPECT_EQ(TypeOf(ii1), AlgebraType::kII1);
  EXPECT_EQ(TypeOf(i100), AlgebraType::kI100);
}

}  // namespace
}  // namespace endoclass
