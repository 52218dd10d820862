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

// Equivalence relations on K* used to index the algebra families.
//
//   sim1: t/t' is a nonzero square.
//   sim2: t + t' = x^2 + x for some x (characteristic 2).
//   sim3: t' x^2 + y^2 + t = 0 for some x != 0 and y (characteristic 2).
//   sim4: 1/t + 1/t' = x^2 + x for some x (characteristic 2).
//   sim5: t'(4+t) / (t(4+t')) is a nonzero square, on K* minus {-4}
//         (characteristic not 2).

#ifndef ENDOCLASS_EQUIV_H_
#define ENDOCLASS_EQUIV_H_

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "endoclass/field.h"

namespace endoclass {

enum class RelationId { kSim1, kSim2, kSim3, kSim4, kSim5 };

std::string_view RelationName(RelationId rel);  // "sim1" ...
std::optional<RelationId> ParseRelationName(std::string_view name);

// Arguments outside the carrier, or a field of the wrong characteristic.
class CarrierError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws CarrierError for characteristic mismatches.
void CheckRelationField(RelationId rel, const Field& field);
bool InCarrier(RelationId rel, const FieldElement& t);

struct SquareRootWitness {
  FieldElement s;  // s^2 is the ratio tested
};
struct ArtinSchreierWitness {
  FieldElement x;  // x^2 + x is the target
};
struct Sim3Witness {
  FieldElement x, y;  // t' x^2 + y^2 + t = 0, x != 0
};
using RelationWitness = std::variant<std::monostate, SquareRootWitness,
                                     ArtinSchreierWitness, Sim3Witness>;

struct RelationResult {
  Decision decision = Decision::kNo;
  RelationWitness witness;  // set whenever decision == kYes

  bool related() const { return decision == Decision::kYes; }
};

// Decides t rel t'. Throws CarrierError on carrier or characteristic
// violations and UnsupportedError for sim2/sim4 over infinite fields.
RelationResult Related(RelationId rel, const FieldElement& t,
                       const FieldElement& t_prime,
                       const SquareOptions& options = {});

// The quantity a witness must realize: t/t' for sim1, t+t' for sim2,
// 1/t+1/t' for sim4, t'(4+t)/(t(4+t')) for sim5. Not used for sim3.
FieldElement RelationTarget(RelationId rel, const FieldElement& t,
                            const FieldElement& t_prime);

// Checks a witness against its defining equation.
bool VerifyWitness(RelationId rel, const FieldElement& t,
                   const FieldElement& t_prime, const RelationWitness& w);

struct RepSystem {
  RelationId relation;
  Field field;
  std::vector<FieldElement> representatives;
  // Finite fields: every carrier element paired with its representative,
  // in enumeration order.
  std::vector<std::pair<FieldElement, FieldElement>> class_map;

  // The representative of t's class.
  FieldElement ClassOf(const FieldElement& t) const;
  // Members of each class, in the order of `representatives`.
  std::vector<std::vector<FieldElement>> Classes() const;
};

// Greedy partition of the carrier in enumeration order. Finite fields, plus
// sim3 over F_2(X) where the classes are those of 1 and X.
RepSystem MakeRepSystem(RelationId rel, const Field& field);

// sim3 over F_2(X): 1 or X, with a witness relating t to it.
std::pair<FieldElement, Sim3Witness> Sim3CanonicalClass(const FieldElement& t);

struct BoundedSearchResult {
  bool found = false;
  std::optional<FieldElement> x;  // x^2 + x equals the target
  // Number of (numerator, denominator) pairs examined.
  std::uint64_t candidates = 0;
};

// Looks for x = p/q with deg p, deg q <= degree_bound solving the sim2 or
// sim4 equation over F_2(X). A miss refutes nothing beyond the bound.
BoundedSearchResult BoundedRefutationSearch(RelationId rel,
                                            const FieldElement& t,
                                            const FieldElement& t_prime,
                                            int degree_bound);

}  // namespace endoclass

#endif  // ENDOCLASS_EQUIV_H_
