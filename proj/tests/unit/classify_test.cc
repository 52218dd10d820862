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

#include "endoclass/classify.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

namespace endoclass {
namespace {

// Values produced by tests/oracle/brute_force.py, which shares no code with
// the library.
const nlohmann::json& Oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(ENDOCLASS_ORACLE_JSON);
    return nlohmann::json::parse(in);
  }();
  return j;
}

SParams S(const Field& f, std::int64_t p, std::int64_t q, std::int64_t a,
          std::int64_t b, std::int64_t c, std::int64_t d) {
  return SParams::FromIntegers(f, p, q, a, b, c, d);
}

TEST(ClassifyTest, ScanCountsMatchOracle) {
  for (const auto* spec : {"F3", "F4"}) {
    const Field f = Field::Parse(spec);
    const auto all = ScanEndoCommutative(f, std::nullopt);
    EXPECT_EQ(all.size(),
              Oracle()[std::to_string(f.order())]["ec_tuples"].get<std::size_t>());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& s : all) EXPECT_TRUE(IsEndoCommutative(s));
  }
  const Field f5 = Field::Parse("F5");
  const auto ii1 = ScanEndoCommutative(f5, AlgebraType::kII1, {4});
  EXPECT_EQ(ii1.size(), 56u);
  for (const auto& s : ii1) EXPECT_EQ(TypeOf(s), AlgebraType::kII1);
  EXPECT_EQ(ii1, ScanEndoCommutative(f5, AlgebraType::kII1, {1}));
}

TEST(ClassifyTest, SubclassExamples) {
  const Field f3 = Field::Parse("F3");
  EXPECT_EQ(ClosedFormSubclass(f3, 1).size(), 12u);
  for (const auto* spec : {"F2", "F3", "F4", "F5", "F7", "F8", "F9", "F27", "F32"}) {
    EXPECT_TRUE(ClosedFormSubclass(Field::Parse(spec), 2).empty()) << spec;
  }
  EXPECT_TRUE(ClosedFormSubclass(Field::Parse("F2"), 4).empty());
  EXPECT_THROW(ClosedFormSubclass(f3, 5), std::invalid_argument);
}

TEST(ClassifyTest, InventoryMatchesOracle) {
  for (const auto* spec : {"F2", "F3", "F4", "F5", "F7", "F8", "F9"}) {
    const Field f = Field::Parse(spec);
    const auto& o = Oracle()[std::to_string(f.order())];
    const SubclassInventory inv = EnumerateSubclasses(f);
    ASSERT_TRUE(inv.scanned);
    EXPECT_TRUE(inv.Consistent()) << spec;
    const auto sizes = o["subclass_sizes"].get<std::vector<std::size_t>>();
    for (int i = 1; i <= 4; ++i) {
      EXPECT_EQ(inv.scan[i].size(), sizes[i - 1]) << spec << " subclass " << i;
      for (const auto& s : inv.scan[i]) EXPECT_EQ(Ii1Subclass(s), i);
    }
    EXPECT_EQ(inv.ScanUnion().size(), o["ecs011"].get<std::size_t>());
    EXPECT_EQ(inv.ScanUnion(), ScanEndoCommutative(f, AlgebraType::kII1));
  }
}

TEST(ClassifyTest, InventoryOnLargerFields) {
  for (const auto* spec : {"F11", "F16", "F25"}) {
    const Field f = Field::Parse(spec);
    const SubclassInventory inv = EnumerateSubclasses(f, {2});
    ASSERT_TRUE(inv.scanned);
    EXPECT_TRUE(inv.Consistent()) << spec;
  }
}

TEST(ClassifyTest, SizeGuards) {
  EXPECT_THROW(EnumerateSubclasses(Field::Parse("Q")), UnsupportedError);
  EXPECT_THROW(VerifyClassification(Field::Parse("F53")), FieldTooLargeError);
  const SubclassInventory big = EnumerateSubclasses(Field::Parse("F64"));
  EXPECT_FALSE(big.scanned);
  EXPECT_FALSE(big.Consistent());
  EXPECT_FALSE(big.closed_form[1].empty());
  if (std::getenv("ENDOCLASS_MAX_Q") == nullptr) EXPECT_EQ(MaxScanOrder(), 49u);
}

TEST(ClassifyTest, IsoClassesExample) {
  const Field f = Field::Parse("F5");
  const SParams a = S(f, 0, 1, 1, 0, -1, 2);
  const SParams b = S(f, 0, 4, 4, 0, -4, 4);
  const auto classes = IsoClasses({b, a, a}, f);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].representative, a);
  ASSERT_EQ(classes[0].members.size(), 2u);
  for (const auto& m : classes[0].members) {
    EXPECT_EQ(Transformed(a.to_structure_matrix(), m.witness),
              m.params.to_structure_matrix());
  }
  EXPECT_EQ(classes[0].members[0].witness, Transform::Identity(f));

  const auto two = IsoClasses({a, S(f, 0, 4, -4, -4, 4, 0)}, f);
  EXPECT_EQ(two.size(), 2u);
}

TEST(ClassifyTest, IsoClassSizesMatchOracle) {
  for (const auto* spec : {"F2", "F3", "F4", "F5", "F7", "F8", "F9"}) {
    const Field f = Field::Parse(spec);
    const auto& o = Oracle()[std::to_string(f.order())];
    const auto classes = IsoClasses(ScanEndoCommutative(f, AlgebraType::kII1), f);
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, o["class_sizes"].get<std::vector<std::size_t>>()) << spec;
  }
}

// Orbit partition against pairwise AreIsomorphic searches.
TEST(ClassifyTest, IsoClassesAgreeWithPairwiseSearch) {
  const Field f = Field::Parse("F3");
  const auto ii1 = ScanEndoCommutative(f, AlgebraType::kII1);
  const auto classes = IsoClasses(ii1, f);
  std::map<SParams, std::size_t> cls;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& m : classes[c].members) cls[m.params] = c;
    for (const auto& m : classes[c].members) {
      EXPECT_GE(m.params, classes[c].representative);
    }
  }
  for (const auto& x : ii1) {
    for (const auto& y : ii1) {
      EXPECT_EQ(AreIsomorphic(x.to_structure_matrix(), y.to_structure_matrix())
                    .has_value(),
                cls.at(x) == cls.at(y));
    }
  }
}

TEST(ClassifyTest, TheoremFamilySizes) {
  EXPECT_EQ(TheoremFamilies(Field::Parse("F3")).size(), 10u);
  EXPECT_EQ(TheoremFamilies(Field::Parse("F2")).size(), 3u);
  EXPECT_EQ(TheoremFamilies(Field::Parse("F4")).size(), 7u);
  for (const auto* spec : {"F2", "F3", "F4", "F5", "F7", "F8", "F9", "F11",
                           "F13", "F16", "F25", "F27", "F32", "F49"}) {
    const Field f = Field::Parse(spec);
    EXPECT_EQ(TheoremFamilies(f).size(), ExpectedClassCount(f)) << spec;
  }
  EXPECT_EQ(ExpectedClassCount(Field::Parse("F9")), 16u);
  EXPECT_EQ(ExpectedClassCount(Field::Parse("F8")), 11u);
}

TEST(ClassifyTest, LabelFormatting) {
  const Field f = Field::Parse("F5");
  FamilyLabel l{FamilyTag::kS3, f.FromInteger(2), 1, -1};
  EXPECT_EQ(l.ToString(), "S3(t=2,eps=+1,delta=-1)");
  EXPECT_EQ((FamilyLabel{FamilyTag::kS4p, std::nullopt}).TagName(), "S4'");
  EXPECT_EQ((FamilyLabel{FamilyTag::kS1, std::nullopt}).ToString(), "S1");
}

TEST(ClassifyTest, VerifySmallFields) {
  for (const auto* spec : {"F2", "F3", "F4", "F5", "F7", "F8", "F9"}) {
    const Field f = Field::Parse(spec);
    const auto& o = Oracle()[std::to_string(f.order())];
    const ClassificationReport r = VerifyClassification(f);
    EXPECT_TRUE(r.pass()) << spec << " " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_TRUE(r.inventory_consistent);
    EXPECT_EQ(r.classes.size(), o["classes"].get<std::size_t>()) << spec;
    EXPECT_EQ(r.ecs011_size, o["ecs011"].get<std::size_t>());
    EXPECT_TRUE(r.failures.empty());
    for (std::size_t i = 0; i < r.predicted.size(); ++i) {
      ASSERT_TRUE(r.predicted_class[i]);
      const IsoClass& c = r.classes[*r.predicted_class[i]];
      EXPECT_EQ(Transformed(c.representative.to_structure_matrix(),
                            *r.predicted_witness[i]),
                r.predicted[i].params.to_structure_matrix());
    }
    for (std::size_t n : r.class_predicted_count) EXPECT_EQ(n, 1u);
  }
}

TEST(ClassifyTest, VerifyIsParallelSafe) {
  const Field f = Field::Parse("F11");
  const auto serial = VerifyClassification(f, {1});
  const auto parallel = VerifyClassification(f, {4});
  EXPECT_TRUE(serial.pass());
  EXPECT_EQ(serial.classes.size(), 18u);
  ASSERT_EQ(parallel.classes.size(), serial.classes.size());
  for (std::size_t i = 0; i < serial.classes.size(); ++i) {
    EXPECT_EQ(parallel.classes[i].representative, serial.classes[i].representative);
  }
}

// Adding a second S3 parameter from an occupied square class adds no class.
TEST(ClassifyTest, SameSquareClassAddsNoClass) {
  const Field f = Field::Parse("F5");
  const auto predicted = TheoremFamilies(f);
  std::vector<SParams> params;
  for (const auto& m : predicted) params.push_back(m.params);
  // t = 1 and t' = 4 lie in the same sim1 class.
  const SParams u = S(f, 0, 1, 1, 0, 1, 0);
  const SParams v = S(f, 0, 4, 4, 0, 4, 0);
  params.push_back(v);
  const auto classes = IsoClasses(params, f);
  EXPECT_EQ(classes.size(), predicted.size());
  EXPECT_TRUE(AreIsomorphic(u.to_structure_matrix(), v.to_structure_matrix()));
}

}  // namespace
}  // namespace endoclass
