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

// Exact coefficient fields: F_p, F_{p^k}, Q and F_2(X).
//
// A Field is a cheap handle onto an interned, immutable implementation, so
// elements can carry a raw owner pointer that stays valid for the life of
// the process. Finite fields are table driven; element codes double as the
// enumeration order (0, 1, then the remaining payloads lexicographically).

#ifndef ENDOCLASS_FIELD_H_
#define ENDOCLASS_FIELD_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "endoclass/gf2_poly.h"

namespace endoclass {

enum class FieldKind { kPrime, kExtension, kRationals, kRationalFunctionsF2 };

struct FieldDescriptor {
  FieldKind kind = FieldKind::kPrime;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  // Extension only: monic modulus, coefficients in ascending degree order
  // (size k + 1).
  std::vector<std::uint32_t> modulus;

  static FieldDescriptor Prime(std::uint32_t p);
  static FieldDescriptor Extension(std::uint32_t p,
                                   std::vector<std::uint32_t> modulus);
  static FieldDescriptor Rationals();
  static FieldDescriptor RationalFunctionsF2();

  friend bool operator==(const FieldDescriptor&,
                         const FieldDescriptor&) = default;
};

// Invalid descriptor, spec string or element text.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands drawn from two different fields.
class FieldMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation not available for this field (e.g. enumerating Q).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A decision that the configured resource bounds do not allow.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Part of the field implementation that inline element arithmetic reads.
struct FieldCore {
  FieldKind kind = FieldKind::kPrime;
  std::uint32_t order = 0;  // 0 for infinite fields
  std::uint32_t characteristic = 0;
  std::vector<std::uint16_t> add_table;  // order * order
  std::vector<std::uint16_t> mul_table;  // order * order
  std::vector<std::uint16_t> neg_table;
  std::vector<std::uint16_t> inv_table;  // inv_table[0] unused
};

class FieldImpl;
struct BigValue;

}  // namespace detail

class Field;

class FieldElement {
 public:
  // An element with no owner; only assignable and destructible.
  FieldElement() = default;

  Field field() const;
  bool valid() const { return core_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  // Finite fields only: position in the enumeration order.
  std::uint32_t code() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  // Throws std::domain_error when rhs is zero.
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) {
    return *this = *this + rhs;
  }
  FieldElement& operator-=(const FieldElement& rhs) {
    return *this = *this - rhs;
  }
  FieldElement& operator*=(const FieldElement& rhs) {
    return *this = *this * rhs;
  }
  FieldElement inverse() const;
  FieldElement pow(std::int64_t exponent) const;

  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);
  // Enumeration order for finite fields; a fixed total order otherwise.
  friend std::strong_ordering operator<=>(const FieldElement& lhs,
                                          const FieldElement& rhs);

  std::string ToString() const;

  // F_2(X) payload as a reduced fraction (numerator, denominator).
  std::pair<GF2Poly, GF2Poly> rational_function() const;
  // Q payload as decimal strings (numerator, positive denominator).
  std::pair<std::string, std::string> rational() const;

 private:
  friend class detail::FieldImpl;

  FieldElement(const detail::FieldCore* core, std::uint32_t code)
      : core_(core), code_(code) {}
  FieldElement(const detail::FieldCore* core,
               std::shared_ptr<const detail::BigValue> big)
      : core_(core), big_(std::move(big)) {}

  const detail::FieldImpl& impl() const;
  void CheckSameField(const FieldElement& rhs) const;

  const detail::FieldCore* core_ = nullptr;
  std::uint32_t code_ = 0;
  std::shared_ptr<const detail::BigValue> big_;
};

enum class Decision { kNo, kYes, kUndecided };

struct SquareResult {
  Decision decision = Decision::kNo;
  // A square root, present whenever decision == kYes.
  std::optional<FieldElement> witness;

  bool is_square() const { return decision == Decision::kYes; }
};

struct SquareOptions {
  // Q only: numerators or denominators larger than this in absolute value
  // are reported as kUndecided.
  std::uint64_t rational_bound = std::uint64_t{1} << 63;
};

class Field {
 public:
  // Validates the descriptor (primality, irreducible modulus, size limits)
  // and returns the interned field. Throws FieldError.
  static Field Make(const FieldDescriptor& descriptor);
  // "F5", "F2^2/x^2+x+1", "F9" (default modulus), "Q", "F2(X)".
  static Field Parse(std::string_view spec);

  const FieldDescriptor& descriptor() const;
  FieldKind kind() const;
  // Canonical spec string, re-parseable by Parse().
  std::string spec() const;
  std::uint32_t characteristic() const;
  bool is_finite() const;
  // Number of elements; throws UnsupportedError for infinite fields.
  std::uint32_t order() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement FromInteger(std::int64_t n) const;
  // num / den inside the field; throws std::domain_error if den maps to 0.
  FieldElement FromFraction(std::int64_t num, std::int64_t den) const;
  // Finite fields: the element with the given enumeration index.
  FieldElement FromCode(std::uint32_t code) const;
  // Q only, decimal strings of arbitrary length.
  FieldElement FromDecimalFraction(std::string_view num,
                                   std::string_view den = "1") const;
  // F_2(X) only.
  FieldElement FromRationalFunction(const GF2Poly& num,
                                    const GF2Poly& den) const;
  // The adjoined root (extension fields) or X (F_2(X)).
  FieldElement Generator() const;

  // Integers, "n/d", polynomial expressions in w (also x or ω) for
  // extension fields and in X for F_2(X), with + - * / ^ and parentheses.
  FieldElement ParseElement(std::string_view text) const;

  // All elements in enumeration order; finite fields only.
  std::vector<FieldElement> Elements() const;
  std::vector<FieldElement> NonzeroElements() const;

  SquareResult IsSquare(const FieldElement& t,
                        const SquareOptions& options = {}) const;

  // Lookup tables indexed by element code, for hot loops over finite
  // fields. Empty for infinite fields.
  const detail::FieldCore& tables() const;

  friend bool operator==(const Field& lhs, const Field& rhs) {
    return lhs.impl_ == rhs.impl_;
  }

 private:
  friend class FieldElement;
  explicit Field(const detail::FieldImpl* impl) : impl_(impl) {}

  const detail::FieldImpl* impl_ = nullptr;
};

// Squarefree kernel of n by trial division (n > 0).
std::uint64_t SquarefreePart(std::uint64_t n);

bool IsPrime(std::uint64_t n);

}  // namespace endoclass

#endif  // ENDOCLASS_FIELD_H_
