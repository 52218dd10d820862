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

#include <algorithm>
#include <atomic>
#include <thread>

namespace endoclass {

namespace {

using Row2 = StructureMatrix::Row;

// M (4x4) times A (4x2).
std::array<Row2, 4> Times(const LiftedTransform& m, const StructureMatrix& a) {
  std::array<Row2, 4> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      FieldElement acc = m.at(i, 0) * a.at(0, j);
      for (int k = 1; k < 4; ++k) acc += m.at(i, k) * a.at(k, j);
      out[i][j] = acc;
    }
  }
  return out;
}

// A (4x2) times X (2x2).
std::array<Row2, 4> Times(const StructureMatrix& a, const Transform& x) {
  std::array<Row2, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i][0] = a.at(i, 0) * x.x + a.at(i, 1) * x.z;
    out[i][1] = a.at(i, 0) * x.y + a.at(i, 1) * x.w;
  }
  return out;
}

Transform FromIndex(const std::vector<FieldElement>& elems, std::uint64_t i) {
  const std::uint64_t q = elems.size();
  const FieldElement& w = elems[i % q];
  i /= q;
  const FieldElement& z = elems[i % q];
  i /= q;
  const FieldElement& y = elems[i % q];
  i /= q;
  return {elems[i], y, z, w};
}

}  // namespace

LiftedTransform LiftedTransform::Identity(const Field& field) {
  Entries e;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) e[i][j] = i == j ? field.one() : field.zero();
  }
  return LiftedTransform(e);
}

LiftedTransform LiftedTransform::operator*(const LiftedTransform& rhs) const {
  Entries e;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      FieldElement acc = m_[i][0] * rhs.m_[0][j];
      for (int k = 1; k < 4; ++k) acc += m_[i][k] * rhs.m_[k][j];
      e[i][j] = acc;
    }
  }
  return LiftedTransform(e);
}

LiftedTransform LiftedTransform::Inverse() const {
  const Field f = m_[0][0].field();
  Entries a = m_;
  Entries inv = Identity(f).m_;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && a[pivot][col].is_zero()) ++pivot;
    if (pivot == 4) throw DomainError("singular lifted transform");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const FieldElement scale = a[col][col].inverse();
    for (int j = 0; j < 4; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const FieldElement factor = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return LiftedTransform(inv);
}

LiftedTransform Lift(const Transform& t) {
  if (!t.invertible()) throw DomainError("lift of a singular matrix");
  const auto& [a, b, c, d] = t;
  return LiftedTransform(LiftedTransform::Entries{{
      {a * a, b * b, a * b, a * b},
      {c * c, d * d, c * d, c * d},
      {a * c, b * d, a * d, b * c},
      {a * c, b * d, b * c, a * d},
  }});
}

StructureMatrix Transformed(const StructureMatrix& a, const Transform& x) {
  if (!(x.field() == a.field())) {
    throw FieldMismatchError("Transformed: matrix and transform differ");
  }
  return StructureMatrix(Times(Lift(x).Inverse(), StructureMatrix(Times(a, x))));
}

bool MapsTo(const StructureMatrix& a, const Transform& x,
            const StructureMatrix& target) {
  return Times(Lift(x), target) == Times(a, x);
}

bool CheckIsoSystem(const SParams& s, const SParams& t, const Transform& m) {
  const auto& [p, q, a, b, c, d] = s;
  const auto& [x, y, z, w] = m;
  const FieldElement& p1 = t.p;
  const FieldElement& q1 = t.q;
  const FieldElement& a1 = t.a;
  const FieldElement& b1 = t.b;
  const FieldElement& c1 = t.c;
  const FieldElement& d1 = t.d;
  return p1 * y * y + (a1 + c1) * x * y == z &&
         x * x + q1 * y * y + (b1 + d1) * x * y == w &&
         p1 * w * w + (a1 + c1) * z * w == p * x + q * z &&
         z * z + q1 * w * w + (b1 + d1) * z * w == p * y + q * w &&
         p1 * y * w + a1 * x * w + c1 * y * z == a * x + b * z &&
         x * z + q1 * y * w + b1 * x * w + d1 * y * z == a * y + b * w &&
         p1 * y * w + a1 * y * z + c1 * x * w == c * x + d * z &&
         x * z + q1 * y * w + b1 * y * z + d1 * x * w == c * y + d * w;
}

std::vector<Transform> GeneralLinearGroup(const Field& field) {
  const auto elems = field.Elements();
  const std::uint64_t q = elems.size();
  std::vector<Transform> out;
  out.reserve((q * q - 1) * (q * q - q));
  for (std::uint64_t i = 0; i < q * q * q * q; ++i) {
    Transform t = FromIndex(elems, i);
    if (t.invertible()) out.push_back(std::move(t));
  }
  return out;
}

std::optional<Transform> AreIsomorphic(const StructureMatrix& a,
                                       const StructureMatrix& b,
                                       const SearchOptions& options) {
  const Field f = a.field();
  if (!(b.field() == f)) {
    throw FieldMismatchError("AreIsomorphic: matrices over different fields");
  }
  if (!f.is_finite()) {
    throw UnsupportedError("isomorphism search needs a finite field");
  }
  // Rank is invariant, so a mismatch settles the question without a scan.
  if (Rank(a) != Rank(b)) return std::nullopt;
  const auto elems = f.Elements();
  const std::uint64_t q = elems.size();
  const std::uint64_t total = q * q * q * q;
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, 64));
  std::atomic<std::uint64_t> best{total};
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end && i < best.load(); ++i) {
      const Transform t = FromIndex(elems, i);
      if (!t.invertible() || !MapsTo(a, t, b)) continue;
      std::uint64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      return;
    }
  };
  if (jobs == 1) {
    scan(0, total);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back(scan, j * chunk, std::min(total, (j + 1) * chunk));
    }
    for (auto& w : workers) w.join();
  }
  if (best.load() == total) return std::nullopt;
  return FromIndex(elems, best.load());
}

}  // namespace endoclass
