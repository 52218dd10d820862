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

// Type II1 endo-commutative straight algebras over a finite field: the four
// subclasses, their isomorphism classes, and the families predicted by the
// classification theorems.

#ifndef ENDOCLASS_CLASSIFY_H_
#define ENDOCLASS_CLASSIFY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endoclass/algebra.h"
#include "endoclass/equiv.h"
#include "endoclass/iso.h"

namespace endoclass {

class FieldTooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Field-size guards. ENDOCLASS_MAX_Q, when set, replaces the scan and
// verification limits.
inline constexpr std::uint32_t kMaxEnumerateOrder = 256;
std::uint32_t MaxScanOrder();    // default 49
std::uint32_t MaxVerifyOrder();  // default 49

struct ScanOptions {
  unsigned jobs = 1;
};

// All endo-commutative S(p,q,a,b,c,d) over F, optionally of one type, in
// enumeration order. Checks all q^6 tuples (q^5 with p = 0 for II1 and the
// types with p = 0).
std::vector<SParams> ScanEndoCommutative(const Field& field,
                                         std::optional<AlgebraType> type,
                                         const ScanOptions& options = {});

// The closed-form parametrization of subclass 1..4 of type II1, sorted.
std::vector<SParams> ClosedFormSubclass(const Field& field, int subclass);

struct SubclassInventory {
  Field field;
  // Indexed by subclass 1..4; slot 0 unused.
  std::array<std::vector<SParams>, 5> closed_form;
  std::array<std::vector<SParams>, 5> scan;
  bool scanned = false;

  // Union of the scanned subclasses (all of type II1), sorted.
  std::vector<SParams> ScanUnion() const;
  // closed_form[i] == scan[i] for every i. False when not scanned.
  bool Consistent() const;
};

// Builds both productions. The scan is skipped (scanned == false) above
// MaxScanOrder(); fields above kMaxEnumerateOrder are rejected.
SubclassInventory EnumerateSubclasses(const Field& field,
                                      const ScanOptions& options = {});

struct ClassMember {
  SParams params;
  Transform witness;  // Transformed(representative, witness) == params
};

struct IsoClass {
  SParams representative;  // least member
  std::vector<ClassMember> members;
};

// Partitions S-form algebras by isomorphism. Each class is the GL_2 orbit
// of its least member intersected with the input; witnesses are the first
// in enumeration order. Duplicates in the input are ignored.
std::vector<IsoClass> IsoClasses(std::vector<SParams> algebras,
                                 const Field& field,
                                 const SearchOptions& options = {});

enum class FamilyTag { kS1, kS2, kS3, kS4, kS1p, kS2p, kS3p, kS4p };

struct FamilyLabel {
  FamilyTag tag;
  std::optional<FieldElement> t;
  int epsilon = 0;  // +1 or -1 for S3, else 0
  int delta = 0;

  std::string TagName() const;  // "S1" ... "S4'"
  std::string ToString() const;  // "S3(t=2,eps=+1,delta=-1)"
};

struct FamilyMember {
  FamilyLabel label;
  SParams params;
};

// The family members predicted for type II1 over F, built from this
// library's representative systems.
std::vector<FamilyMember> TheoremFamilies(const Field& field);

// q+7 in odd characteristic, q+3 in characteristic 2 with q >= 4, 3 for F2.
std::size_t ExpectedClassCount(const Field& field);

struct VerifyOptions {
  unsigned jobs = 1;
};

struct ClassificationReport {
  explicit ClassificationReport(Field f) : field(f) {}

  Field field;
  std::array<std::size_t, 5> subclass_sizes{};  // from the scan
  std::size_t ecs011_size = 0;
  bool inventory_consistent = false;

  std::vector<IsoClass> classes;
  std::vector<FamilyMember> predicted;
  // Per predicted member: the class holding it and the witness mapping the
  // class representative onto it.
  std::vector<std::optional<std::size_t>> predicted_class;
  std::vector<std::optional<Transform>> predicted_witness;
  // Per class: how many predicted members it holds.
  std::vector<std::size_t> class_predicted_count;
  // Predicted pairs (i < j) found isomorphic, with a witness.
  struct IsomorphicPair {
    std::size_t first, second;
    Transform witness;
  };
  std::vector<IsomorphicPair> isomorphic_predicted_pairs;
  std::size_t transforms_searched = 0;

  bool members_valid = false;       // (a) EC, straight, type II1
  bool pairwise_distinct = false;   // (b)
  bool count_matches = false;       // (c)
  bool bijective = false;           // (d)
  std::vector<std::string> failures;

  bool pass() const {
    return members_valid && pairwise_distinct && count_matches && bijective;
  }
};

ClassificationReport VerifyClassification(const Field& field,
                                          const VerifyOptions& options = {});

}  // namespace endoclass

#endif  // ENDOCLASS_CLASSIFY_H_
