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

// Change of basis on structure matrices and isomorphism search.
//
// For X in GL_2(K) the lift X~ is the 4x4 matrix of pairwise products of
// the entries of X, and X maps A to A' = X~^-1 A X.

#ifndef ENDOCLASS_ISO_H_
#define ENDOCLASS_ISO_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "endoclass/algebra.h"

namespace endoclass {

class LiftedTransform {
 public:
  using Entries = std::array<std::array<FieldElement, 4>, 4>;

  explicit LiftedTransform(Entries entries) : m_(std::move(entries)) {}
  static LiftedTransform Identity(const Field& field);

  const FieldElement& at(int row, int col) const { return m_[row][col]; }
  LiftedTransform operator*(const LiftedTransform& rhs) const;
  // Gaussian elimination; throws DomainError when singular.
  LiftedTransform Inverse() const;

  friend bool operator==(const LiftedTransform&,
                         const LiftedTransform&) = default;

 private:
  Entries m_;
};

// Throws DomainError when X is singular.
LiftedTransform Lift(const Transform& x);

// lift(X)^-1 * A * X, with the inverse taken by elimination.
StructureMatrix Transformed(const StructureMatrix& a, const Transform& x);

// Same predicate as Transformed(a, x) == target without inverting:
// lift(X) * target == A * X.
bool MapsTo(const StructureMatrix& a, const Transform& x,
            const StructureMatrix& target);

// The eight polynomial equations relating S, S' and the entries of X.
// True exactly when Transformed(S, X) is the structure matrix of S'.
bool CheckIsoSystem(const SParams& s, const SParams& s_prime,
                    const Transform& x);

// All of GL_2(F) in enumeration order of (x, y, z, w).
std::vector<Transform> GeneralLinearGroup(const Field& field);

struct SearchOptions {
  unsigned jobs = 1;
};

// First X (in enumeration order) with Transformed(a, X) == b, if any.
// Finite fields only.
std::optional<Transform> AreIsomorphic(const StructureMatrix& a,
                                       const StructureMatrix& b,
                                       const SearchOptions& options = {});

}  // namespace endoclass

#endif  // ENDOCLASS_ISO_H_
