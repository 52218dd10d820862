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

// Two-dimensional algebras given by structure matrices.
//
// The structure matrix lists e^2, f^2, ef, fe (in that order) as rows of
// coordinates in the basis {e, f}. Straight-form algebras S(p,q,a,b,c,d)
// have e^2 = f, f^2 = pe+qf, ef = ae+bf and fe = ce+df.

#ifndef ENDOCLASS_ALGEBRA_H_
#define ENDOCLASS_ALGEBRA_H_

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "endoclass/field.h"

namespace endoclass {

// Raised when a procedure defined only on endo-commutative straight
// algebras, or on one type of them, receives something else.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// u e + v f.
struct AlgebraElement {
  FieldElement u;
  FieldElement v;

  friend bool operator==(const AlgebraElement&,
                         const AlgebraElement&) = default;
};

// The 2x2 matrix ((x, y), (z, w)).
struct Transform {
  FieldElement x, y, z, w;

  static Transform Identity(const Field& field);
  Field field() const { return x.field(); }
  FieldElement determinant() const { return x * w - y * z; }
  bool invertible() const { return !determinant().is_zero(); }
  // Throws DomainError when singular.
  Transform inverse() const;
  Transform operator*(const Transform& rhs) const;

  friend bool operator==(const Transform&, const Transform&) = default;
  std::string ToString() const;  // "((x,y),(z,w))"
};

class StructureMatrix {
 public:
  using Row = std::array<FieldElement, 2>;
  static constexpr int kE2 = 0;
  static constexpr int kF2 = 1;
  static constexpr int kEF = 2;
  static constexpr int kFE = 3;

  // Throws FieldMismatchError unless all entries share one field.
  StructureMatrix(std::array<Row, 4> rows);
  static StructureMatrix Zero(const Field& field);

  Field field() const { return rows_[0][0].field(); }
  const FieldElement& at(int row, int col) const { return rows_[row][col]; }
  const std::array<Row, 4>& rows() const { return rows_; }

  friend bool operator==(const StructureMatrix&,
                         const StructureMatrix&) = default;

  // The table ((e^2, ef), (fe, f^2)) with products written as "ae+bf".
  std::string TableString() const;

 private:
  std::array<Row, 4> rows_;
};

struct SParams {
  FieldElement p, q, a, b, c, d;

  // Parses a comma-separated tuple such as "0,1,1,0,-1,2".
  static SParams Parse(const Field& field, std::string_view tuple);
  static SParams FromIntegers(const Field& field, std::int64_t p,
                              std::int64_t q, std::int64_t a, std::int64_t b,
                              std::int64_t c, std::int64_t d);

  Field field() const { return p.field(); }
  StructureMatrix to_structure_matrix() const;
  std::array<FieldElement, 6> values() const { return {p, q, a, b, c, d}; }

  friend bool operator==(const SParams&, const SParams&) = default;
  // Lexicographic on (p, q, a, b, c, d) in enumeration order.
  friend std::strong_ordering operator<=>(const SParams& lhs,
                                          const SParams& rhs);

  std::string ToString() const;  // "S(0,1,1,0,4,2)"
};

// The SParams of A when A is already in straight form (e^2 = f).
std::optional<SParams> AsStraightForm(const StructureMatrix& a);

AlgebraElement Multiply(const StructureMatrix& a, const AlgebraElement& x,
                        const AlgebraElement& y);
AlgebraElement Square(const StructureMatrix& a, const AlgebraElement& x);

// x^2 y^2 == (xy)^2 for all pairs; exhaustive, finite fields only.
bool IsEndoCommutativeDefinitional(const StructureMatrix& a);
// The five polynomial conditions on (p, q, a, b, c, d).
bool IsEndoCommutative(const SParams& s);

// Every x is dependent with x^2. Finite fields only.
bool IsCurled(const StructureMatrix& a);

struct StraightForm {
  SParams params;
  // transform(a, basis) equals params.to_structure_matrix().
  Transform basis;
};
// Rewrites A in the basis {x, x^2} for the first x (in enumeration order of
// (u, v)) making that basis independent. nullopt when A is curled.
std::optional<StraightForm> ToStraightForm(const StructureMatrix& a);

int Rank(const StructureMatrix& a);

enum class AlgebraType { kI001, kI010, kI100, kII1, kII2, kII3, kIII,
                         kNotRank2 };

// Classifies an endo-commutative S by which of p, a, c vanish. Throws
// DomainError when S is not endo-commutative.
AlgebraType TypeOf(const SParams& s);
std::string_view TypeName(AlgebraType type);  // "I.001", "II1", ...
// Inverse of TypeName.
std::optional<AlgebraType> ParseTypeName(std::string_view name);

// 1..4 by the vanishing of b, q, d. Throws DomainError unless S is II1.
int Ii1Subclass(const SParams& s);

}  // namespace endoclass

#endif  // ENDOCLASS_ALGEBRA_H_
