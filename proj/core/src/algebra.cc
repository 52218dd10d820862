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

#include "endoclass/algebra.h"

#include <algorithm>
#include <sstream>
#include <vector>

namespace endoclass {

namespace {

std::string Coefficient(const FieldElement& c, const std::string& symbol) {
  const std::string s = c.ToString();
  if (s == "1") return symbol;
  if (s == "-1") return "-" + symbol;
  if (s.find_first_of("+-/", 1) != std::string::npos ||
      s.find('^') != std::string::npos) {
    return "(" + s + ")" + symbol;
  }
  return s + symbol;
}

std::string Product(const StructureMatrix::Row& row) {
  const bool ze = row[0].is_zero();
  const bool zf = row[1].is_zero();
  if (ze && zf) return "0";
  if (zf) return Coefficient(row[0], "e");
  if (ze) return Coefficient(row[1], "f");
  std::string rhs = Coefficient(row[1], "f");
  return Coefficient(row[0], "e") + (rhs[0] == '-' ? "" : "+") + rhs;
}

AlgebraElement Combine(const FieldElement& alpha, const StructureMatrix::Row& r,
                       const AlgebraElement& acc) {
  return {acc.u + alpha * r[0], acc.v + alpha * r[1]};
}

}  // namespace

// ---------------------------------------------------------------------------

Transform Transform::Identity(const Field& field) {
  return {field.one(), field.zero(), field.zero(), field.one()};
}

Transform Transform::inverse() const {
  const FieldElement det = determinant();
  if (det.is_zero()) throw DomainError("singular transformation matrix");
  const FieldElement inv = det.inverse();
  return {w * inv, -y * inv, -z * inv, x * inv};
}

Transform Transform::operator*(const Transform& r) const {
  return {x * r.x + y * r.z, x * r.y + y * r.w, z * r.x + w * r.z,
          z * r.y + w * r.w};
}

std::string Transform::ToString() const {
  return "((" + x.ToString() + "," + y.ToString() + "),(" + z.ToString() +
         "," + w.ToString() + "))";
}

// ---------------------------------------------------------------------------

StructureMatrix::StructureMatrix(std::array<Row, 4> rows)
    : rows_(std::move(rows)) {
  const Field f = rows_[0][0].field();
  for (const Row& r : rows_) {
    for (const FieldElement& e : r) {
      if (!(e.field() == f)) {
        throw FieldMismatchError("structure matrix mixes fields");
      }
    }
  }
}

StructureMatrix StructureMatrix::Zero(const Field& field) {
  const FieldElement z = field.zero();
  return StructureMatrix({Row{z, z}, Row{z, z}, Row{z, z}, Row{z, z}});
}

std::string StructureMatrix::TableString() const {
  const std::string cells[2][2] = {{Product(rows_[kE2]), Product(rows_[kEF])},
                                   {Product(rows_[kFE]), Product(rows_[kF2])}};
  const std::size_t width =
      std::max(cells[0][0].size(), cells[1][0].size()) + 2;
  std::ostringstream out;
  for (const auto& line : cells) {
    out << "( " << line[0] << std::string(width - line[0].size(), ' ')
        << line[1] << " )\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

SParams SParams::Parse(const Field& field, std::string_view tuple) {
  std::string_view body = tuple;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.substr(0, 2) == "S(" && body.back() == ')') {
    body = body.substr(2, body.size() - 3);
  }
  std::vector<FieldElement> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    parts.push_back(field.ParseElement(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 6) {
    throw FieldError("expected 6 comma-separated values, got " +
                     std::to_string(parts.size()));
  }
  return {parts[0], parts[1], parts[2], parts[3], parts[4], parts[5]};
}

SParams SParams::FromIntegers(const Field& f, std::int64_t p, std::int64_t q,
                              std::int64_t a, std::int64_t b, std::int64_t c,
                              std::int64_t d) {
  return {f.FromInteger(p), f.FromInteger(q), f.FromInteger(a),
          f.FromInteger(b), f.FromInteger(c), f.FromInteger(d)};
}

StructureMatrix SParams::to_structure_matrix() const {
  const Field f = field();
  return StructureMatrix({StructureMatrix::Row{f.zero(), f.one()},
                          StructureMatrix::Row{p, q},
                          StructureMatrix::Row{a, b},
                          StructureMatrix::Row{c, d}});
}

std::strong_ordering operator<=>(const SParams& lhs, const SParams& rhs) {
  const auto l = lhs.values();
  const auto r = rhs.values();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (auto c = l[i] <=> r[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string SParams::ToString() const {
  std::string out = "S(";
  const auto v = values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].ToString();
  }
  return out + ")";
}

std::optional<SParams> AsStraightForm(const StructureMatrix& m) {
  if (!m.at(0, 0).is_zero() || !m.at(0, 1).is_one()) return std::nullopt;
  return SParams{m.at(1, 0), m.at(1, 1), m.at(2, 0),
                 m.at(2, 1), m.at(3, 0), m.at(3, 1)};
}

// ---------------------------------------------------------------------------

AlgebraElement Multiply(const StructureMatrix& a, const AlgebraElement& x,
                        const AlgebraElement& y) {
  const Field f = a.field();
  if (!(x.u.field() == f) || !(x.v.field() == f) || !(y.u.field() == f) ||
      !(y.v.field() == f)) {
    throw FieldMismatchError("Multiply: operands over another field");
  }
  AlgebraElement r{f.zero(), f.zero()};
  r = Combine(x.u * y.u, a.rows()[StructureMatrix::kE2], r);
  r = Combine(x.v * y.v, a.rows()[StructureMatrix::kF2], r);
  r = Combine(x.u * y.v, a.rows()[StructureMatrix::kEF], r);
  r = Combine(x.v * y.u, a.rows()[StructureMatrix::kFE], r);
  return r;
}

AlgebraElement Square(const StructureMatrix& a, const AlgebraElement& x) {
  return Multiply(a, x, x);
}

bool IsEndoCommutativeDefinitional(const StructureMatrix& a) {
  const Field f = a.field();
  if (!f.is_finite()) {
    throw UnsupportedError(
        "definitional endo-commutativity check needs a finite field");
  }
  const auto elems = f.Elements();
  std::vector<AlgebraElement> all;
  all.reserve(elems.size() * elems.size());
  for (const auto& u : elems) {
    for (const auto& v : elems) all.push_back({u, v});
  }
  std::vector<AlgebraElement> squares;
  squares.reserve(all.size());
  for (const auto& x : all) squares.push_back(Square(a, x));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (Multiply(a, squares[i], squares[j]) !=
          Square(a, Multiply(a, all[i], all[j]))) {
        return false;
      }
    }
  }
  return true;
}

bool IsEndoCommutative(const SParams& s) {
  const auto& [p, q, a, b, c, d] = s;
  if (p * q + p * c != p * b * b + a * a * b + a * b * c) return false;
  if (p * (c - a) != (b - d) * (p * (b + d) - q * (a + c))) return false;
  if (p * (d - b) != a * a - c * c) return false;
  if (q * q + p * d != a * a + q * b * b + a * b * b + a * b * d) return false;
  return q * (d - b) == a * b - c * d;
}

bool IsCurled(const StructureMatrix& a) {
  return !ToStraightForm(a).has_value();
}

std::optional<StraightForm> ToStraightForm(const StructureMatrix& a) {
  const Field f = a.field();
  if (!f.is_finite()) {
    throw UnsupportedError("straight-form search needs a finite field");
  }
  const auto elems = f.Elements();
  for (const auto& u : elems) {
    for (const auto& v : elems) {
      const AlgebraElement x{u, v};
      const AlgebraElement x2 = Square(a, x);
      // P has the new basis {x, x^2} as rows; new coordinates are old
      // coordinates times P^-1.
      const Transform basis_rows{x.u, x.v, x2.u, x2.v};
      if (!basis_rows.invertible()) continue;
      const Transform inv = basis_rows.inverse();
      auto coords = [&](const AlgebraElement& g) {
        return AlgebraElement{g.u * inv.x + g.v * inv.z,
                              g.u * inv.y + g.v * inv.w};
      };
      const AlgebraElement f2 = coords(Multiply(a, x2, x2));
      const AlgebraElement ef = coords(Multiply(a, x, x2));
      const AlgebraElement fe = coords(Multiply(a, x2, x));
      return StraightForm{SParams{f2.u, f2.v, ef.u, ef.v, fe.u, fe.v}, inv};
    }
  }
  return std::nullopt;
}

int Rank(const StructureMatrix& a) {
  bool any = false;
  const auto& rows = a.rows();
  for (int i = 0; i < 4; ++i) {
    if (!rows[i][0].is_zero() || !rows[i][1].is_zero()) any = true;
    for (int j = i + 1; j < 4; ++j) {
      if (rows[i][0] * rows[j][1] != rows[i][1] * rows[j][0]) return 2;
    }
  }
  return any ? 1 : 0;
}

AlgebraType TypeOf(const SParams& s) {
  if (!IsEndoCommutative(s)) {
    throw DomainError(s.ToString() + " is not endo-commutative");
  }
  const int pattern = (s.p.is_zero() ? 0 : 4) | (s.a.is_zero() ? 0 : 2) |
                      (s.c.is_zero() ? 0 : 1);
  switch (pattern) {
    case 0b000: return AlgebraType::kNotRank2;
    case 0b001: return AlgebraType::kI001;
    case 0b010: return AlgebraType::kI010;
    case 0b100: return AlgebraType::kI100;
    case 0b011: return AlgebraType::kII1;
    case 0b101: return AlgebraType::kII2;
    case 0b110: return AlgebraType::kII3;
    default: return AlgebraType::kIII;
  }
}

std::string_view TypeName(AlgebraType type) {
  switch (type) {
    case AlgebraType::kI001: return "I.001";
    case AlgebraType::kI010: return "I.010";
    case AlgebraType::kI100: return "I.100";
    case AlgebraType::kII1: return "II1";
    case AlgebraType::kII2: return "II2";
    case AlgebraType::kII3: return "II3";
    case AlgebraType::kIII: return "III";
    case AlgebraType::kNotRank2: return "not-rank-2";
  }
  return "?";
}

std::optional<AlgebraType> ParseTypeName(std::string_view name) {
  for (AlgebraType t :
       {AlgebraType::kI001, AlgebraType::kI010, AlgebraType::kI100,
        AlgebraType::kII1, AlgebraType::kII2, AlgebraType::kII3,
        AlgebraType::kIII, AlgebraType::kNotRank2}) {
    if (TypeName(t) == name) return t;
  }
  return std::nullopt;
}

int Ii1Subclass(const SParams& s) {
  if (TypeOf(s) != AlgebraType::kII1) {
    throw DomainError(s.ToString() + " is not of type II1");
  }
  if (s.b.is_zero()) return 1;
  if (s.q.is_zero()) return 2;
  if (s.d.is_zero()) return 3;
  return 4;
}

}  // namespace endoclass
