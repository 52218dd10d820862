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

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_map>

namespace endoclass {

namespace {

constexpr std::uint32_t kDefaultScanOrder = 49;
constexpr std::uint32_t kDefaultVerifyOrder = 49;
constexpr std::uint64_t kMaxScanTuples = std::uint64_t{1} << 31;
constexpr std::uint32_t kNoHit = std::numeric_limits<std::uint32_t>::max();

using Codes6 = std::array<std::uint16_t, 6>;

// Table-driven arithmetic on element codes.
class CodeOps {
 public:
  explicit CodeOps(const Field& f)
      : add_(f.tables().add_table.data()),
        mul_(f.tables().mul_table.data()),
        neg_(f.tables().neg_table.data()),
        inv_(f.tables().inv_table.data()),
        q_(f.tables().order) {}

  std::uint32_t q() const { return q_; }
  std::uint16_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * q_ + b];
  }
  std::uint16_t sub(std::uint32_t a, std::uint32_t b) const {
    return add_[a * q_ + neg_[b]];
  }
  std::uint16_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * q_ + b];
  }
  std::uint16_t inv(std::uint32_t a) const { return inv_[a]; }

 private:
  const std::uint16_t* add_;
  const std::uint16_t* mul_;
  const std::uint16_t* neg_;
  const std::uint16_t* inv_;
  std::uint32_t q_;
};

// The five endo-commutativity equations on codes.
bool EndoCommutativeCodes(const CodeOps& o, std::uint32_t p, std::uint32_t q,
                          std::uint32_t a, std::uint32_t b, std::uint32_t c,
                          std::uint32_t d) {
  const std::uint16_t aa = o.mul(a, a);
  const std::uint16_t cc = o.mul(c, c);
  // p(d-b) = a^2 - c^2
  if (o.mul(p, o.sub(d, b)) != o.sub(aa, cc)) return false;
  // q(d-b) = ab - cd
  if (o.mul(q, o.sub(d, b)) != o.sub(o.mul(a, b), o.mul(c, d))) return false;
  const std::uint16_t ab = o.mul(a, b);
  // pq + pc = pb^2 + a^2 b + abc
  if (o.add(o.mul(p, q), o.mul(p, c)) !=
      o.add(o.add(o.mul(p, o.mul(b, b)), o.mul(aa, b)), o.mul(ab, c))) {
    return false;
  }
  // p(c-a) = (b-d)(p(b+d) - q(a+c))
  if (o.mul(p, o.sub(c, a)) !=
      o.mul(o.sub(b, d), o.sub(o.mul(p, o.add(b, d)), o.mul(q, o.add(a, c))))) {
    return false;
  }
  // q^2 + pd = a^2 + qb^2 + ab^2 + abd
  return o.add(o.mul(q, q), o.mul(p, d)) ==
         o.add(o.add(aa, o.mul(q, o.mul(b, b))),
               o.add(o.mul(ab, b), o.mul(ab, d)));
}

AlgebraType TypeFromCodes(std::uint32_t p, std::uint32_t a, std::uint32_t c) {
  const int pattern = (p ? 4 : 0) | (a ? 2 : 0) | (c ? 1 : 0);
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

std::uint64_t Pack(const Codes6& c) {
  std::uint64_t key = 0;
  for (std::uint16_t v : c) key = (key << 8) | v;
  return key;
}

Codes6 CodesOf(const SParams& s) {
  Codes6 c;
  const auto v = s.values();
  for (std::size_t i = 0; i < 6; ++i) c[i] = static_cast<std::uint16_t>(v[i].code());
  return c;
}

SParams FromCodes(const Field& f, const Codes6& c) {
  return {f.FromCode(c[0]), f.FromCode(c[1]), f.FromCode(c[2]),
          f.FromCode(c[3]), f.FromCode(c[4]), f.FromCode(c[5])};
}

Transform TransformFromIndex(const Field& f, std::uint64_t i) {
  const std::uint64_t q = f.order();
  const auto w = static_cast<std::uint32_t>(i % q);
  i /= q;
  const auto z = static_cast<std::uint32_t>(i % q);
  i /= q;
  const auto y = static_cast<std::uint32_t>(i % q);
  i /= q;
  return {f.FromCode(static_cast<std::uint32_t>(i)), f.FromCode(y),
          f.FromCode(z), f.FromCode(w)};
}

template <typename Fn>
void ParallelChunks(std::uint64_t total, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, 64));
  if (jobs == 1 || total < 2) {
    fn(0U, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t begin = std::min(total, j * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&fn, j, begin, end] { fn(j, begin, end); });
  }
  for (auto& w : workers) w.join();
}

// Applies every X in GL_2 (enumeration order) to the structure matrix A,
// given as 8 codes (rows e^2, f^2, ef, fe), and records for each target
// S-form the index of the first X with Transformed(A, X) == target.
// Returns the number of invertible X examined.
std::uint64_t OrbitScan(const CodeOps& o, const std::array<std::uint16_t, 8>& a,
                        const std::unordered_map<std::uint64_t, std::size_t>&
                            targets,
                        std::vector<std::uint32_t>& first_hit, unsigned jobs) {
  const std::uint64_t q = o.q();
  const std::uint64_t total = q * q * q * q;
  std::vector<std::vector<std::uint32_t>> local(
      std::max(1U, std::min<unsigned>(jobs, 64)),
      std::vector<std::uint32_t>(first_hit.size(), kNoHit));
  std::vector<std::uint64_t> examined(local.size(), 0);
  ParallelChunks(total, jobs, [&](unsigned worker, std::uint64_t begin,
                                  std::uint64_t end) {
    auto& hits = local[worker];
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t r = idx;
      const auto w = static_cast<std::uint32_t>(r % q);
      r /= q;
      const auto z = static_cast<std::uint32_t>(r % q);
      r /= q;
      const auto y = static_cast<std::uint32_t>(r % q);
      const auto x = static_cast<std::uint32_t>(r / q);
      const std::uint16_t det = o.sub(o.mul(x, w), o.mul(y, z));
      if (det == 0) continue;
      ++count;
      // Y = X^-1 and lift(Y) = lift(X)^-1.
      const std::uint16_t di = o.inv(det);
      const std::uint16_t ya = o.mul(w, di);
      const std::uint16_t yb = o.sub(0, o.mul(y, di));
      const std::uint16_t yc = o.sub(0, o.mul(z, di));
      const std::uint16_t yd = o.mul(x, di);
      // A X.
      std::uint16_t ax[4][2];
      for (int i = 0; i < 4; ++i) {
        ax[i][0] = o.add(o.mul(a[2 * i], x), o.mul(a[2 * i + 1], z));
        ax[i][1] = o.add(o.mul(a[2 * i], y), o.mul(a[2 * i + 1], w));
      }
      auto row = [&](std::uint16_t l0, std::uint16_t l1, std::uint16_t l2,
                     std::uint16_t l3, int col) {
        return o.add(o.add(o.mul(l0, ax[0][col]), o.mul(l1, ax[1][col])),
                     o.add(o.mul(l2, ax[2][col]), o.mul(l3, ax[3][col])));
      };
      const std::uint16_t aa = o.mul(ya, ya), bb = o.mul(yb, yb),
                          ab = o.mul(ya, yb);
      if (row(aa, bb, ab, ab, 0) != 0 || row(aa, bb, ab, ab, 1) != 1) continue;
      const std::uint16_t cc = o.mul(yc, yc), dd = o.mul(yd, yd),
                          cd = o.mul(yc, yd), ac = o.mul(ya, yc),
                          bd = o.mul(yb, yd), ad = o.mul(ya, yd),
                          bc = o.mul(yb, yc);
      const Codes6 m{row(cc, dd, cd, cd, 0), row(cc, dd, cd, cd, 1),
                     row(ac, bd, ad, bc, 0), row(ac, bd, ad, bc, 1),
                     row(ac, bd, bc, ad, 0), row(ac, bd, bc, ad, 1)};
      auto it = targets.find(Pack(m));
      if (it != targets.end() && hits[it->second] == kNoHit) {
        hits[it->second] = static_cast<std::uint32_t>(idx);
      }
    }
    examined[worker] = count;
  });
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < local.size(); ++w) {
    count += examined[w];
    for (std::size_t t = 0; t < first_hit.size(); ++t) {
      first_hit[t] = std::min(first_hit[t], local[w][t]);
    }
  }
  return count;
}

std::array<std::uint16_t, 8> MatrixCodes(const SParams& s) {
  const Codes6 c = CodesOf(s);
  return {0, 1, c[0], c[1], c[2], c[3], c[4], c[5]};
}

std::uint32_t EnvOverride(std::uint32_t fallback) {
  if (const char* v = std::getenv("ENDOCLASS_MAX_Q")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) {
      return static_cast<std::uint32_t>(std::min<unsigned long>(n, 1U << 16));
    }
  }
  return fallback;
}

void RequireFinite(const Field& f, std::uint32_t limit, const char* what) {
  if (!f.is_finite()) {
    throw UnsupportedError(std::string(what) + " needs a finite field");
  }
  if (f.order() > limit) {
    throw FieldTooLargeError(std::string(what) + ": " + f.spec() + " has " +
                             std::to_string(f.order()) +
                             " elements, above the limit " +
                             std::to_string(limit) +
                             " (ENDOCLASS_MAX_Q raises it)");
  }
}

void SortUnique(std::vector<SParams>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::uint32_t MaxScanOrder() { return EnvOverride(kDefaultScanOrder); }
std::uint32_t MaxVerifyOrder() { return EnvOverride(kDefaultVerifyOrder); }

std::vector<SParams> ScanEndoCommutative(const Field& field,
                                         std::optional<AlgebraType> type,
                                         const ScanOptions& options) {
  RequireFinite(field, MaxScanOrder(), "scan");
  const CodeOps o(field);
  const std::uint64_t q = o.q();
  const bool p_zero =
      type && (*type == AlgebraType::kII1 || *type == AlgebraType::kI001 ||
               *type == AlgebraType::kI010 || *type == AlgebraType::kNotRank2);
  const std::uint64_t outer = p_zero ? q : q * q;  // (p, q) pairs
  if (outer * q * q * q * q > kMaxScanTuples) {
    throw FieldTooLargeError("scan over " + field.spec() +
                             " would visit too many tuples");
  }
  std::vector<std::vector<Codes6>> parts(outer);
  ParallelChunks(outer, options.jobs, [&](unsigned, std::uint64_t begin,
                                          std::uint64_t end) {
    for (std::uint64_t pq = begin; pq < end; ++pq) {
      const auto p = static_cast<std::uint16_t>(p_zero ? 0 : pq / q);
      const auto qq = static_cast<std::uint16_t>(pq % q);
      for (std::uint16_t a = 0; a < q; ++a) {
        for (std::uint16_t b = 0; b < q; ++b) {
          for (std::uint16_t c = 0; c < q; ++c) {
            if (type && TypeFromCodes(p, a, c) != *type) continue;
            for (std::uint16_t d = 0; d < q; ++d) {
              if (EndoCommutativeCodes(o, p, qq, a, b, c, d)) {
                parts[pq].push_back({p, qq, a, b, c, d});
              }
            }
          }
        }
      }
    }
  });
  std::vector<SParams> out;
  for (const auto& part : parts) {
    for (const auto& c : part) out.push_back(FromCodes(field, c));
  }
  return out;
}

std::vector<SParams> ClosedFormSubclass(const Field& f, int subclass) {
  RequireFinite(f, kMaxEnumerateOrder, "closed-form enumeration");
  const auto units = f.NonzeroElements();
  const FieldElement zero = f.zero();
  const bool char2 = f.characteristic() == 2;
  std::vector<SParams> out;
  switch (subclass) {
    case 1:
      for (const auto& a : units) {
        for (const auto& d : units) out.push_back({zero, a, a, zero, -a, d});
        for (int eps : {1, -1}) {
          for (int del : {1, -1}) {
            out.push_back({zero, f.FromInteger(eps) * a, a, zero,
                           f.FromInteger(del) * a, zero});
          }
        }
      }
      break;
    case 2:
      break;
    case 3:
      for (const auto& a : units) {
        for (const auto& b : units) out.push_back({zero, -a, a, b, -a, zero});
      }
      break;
    case 4:
      if (!char2) {
        const FieldElement quarter = f.FromInteger(4).inverse();
        for (const auto& b : units) {
          for (const auto& d : units) {
            if (b == d || b == -d) continue;
            out.push_back({zero, (b + d) * (b + d) * quarter,
                           (d * d - b * b) * quarter, b,
                           (b * b - d * d) * quarter, d});
          }
        }
      } else {
        for (const auto& q : units) {
          for (const auto& a : units) {
            for (const auto& b : units) {
              if ((q * q + a * a + q * b * b).is_zero()) {
                out.push_back({zero, q, a, b, a, b});
              }
            }
          }
        }
      }
      break;
    default:
      throw std::invalid_argument("subclass must be 1..4");
  }
  SortUnique(out);
  return out;
}

std::vector<SParams> SubclassInventory::ScanUnion() const {
  std::vector<SParams> out;
  for (int i = 1; i <= 4; ++i) out.insert(out.end(), scan[i].begin(), scan[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

bool SubclassInventory::Consistent() const {
  if (!scanned) return false;
  for (int i = 1; i <= 4; ++i) {
    if (closed_form[i] != scan[i]) return false;
  }
  return true;
}

SubclassInventory EnumerateSubclasses(const Field& field,
                                      const ScanOptions& options) {
  RequireFinite(field, kMaxEnumerateOrder, "subclass enumeration");
  SubclassInventory inv{field, {}, {}, false};
  for (int i = 1; i <= 4; ++i) inv.closed_form[i] = ClosedFormSubclass(field, i);
  if (field.order() > MaxScanOrder()) return inv;
  for (SParams& s : ScanEndoCommutative(field, AlgebraType::kII1, options)) {
    const int sub = Ii1Subclass(s);
    inv.scan[sub].push_back(std::move(s));
  }
  inv.scanned = true;
  return inv;
}

std::vector<IsoClass> IsoClasses(std::vector<SParams> algebras,
                                 const Field& field,
                                 const SearchOptions& options) {
  RequireFinite(field, kMaxEnumerateOrder, "isomorphism classes");
  for (const auto& s : algebras) {
    if (!(s.field() == field)) {
      throw FieldMismatchError("IsoClasses: algebra over another field");
    }
  }
  SortUnique(algebras);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    index.emplace(Pack(CodesOf(algebras[i])), i);
  }
  const CodeOps o(field);
  std::vector<bool> assigned(algebras.size(), false);
  std::vector<IsoClass> classes;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::uint32_t> hits(algebras.size(), kNoHit);
    OrbitScan(o, MatrixCodes(algebras[i]), index, hits, options.jobs);
    IsoClass cls{algebras[i], {}};
    for (std::size_t j = i; j < algebras.size(); ++j) {
      if (hits[j] == kNoHit || assigned[j]) continue;
      assigned[j] = true;
      cls.members.push_back({algebras[j], TransformFromIndex(field, hits[j])});
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::string FamilyLabel::TagName() const {
  switch (tag) {
    case FamilyTag::kS1: return "S1";
    case FamilyTag::kS2: return "S2";
    case FamilyTag::kS3: return "S3";
    case FamilyTag::kS4: return "S4";
    case FamilyTag::kS1p: return "S1'";
    case FamilyTag::kS2p: return "S2'";
    case FamilyTag::kS3p: return "S3'";
    case FamilyTag::kS4p: return "S4'";
  }
  return "?";
}

std::string FamilyLabel::ToString() const {
  std::string out = TagName();
  if (!t) return out;
  out += "(t=" + t->ToString();
  if (epsilon != 0) {
    out += std::string(",eps=") + (epsilon > 0 ? "+1" : "-1");
    out += std::string(",delta=") + (delta > 0 ? "+1" : "-1");
  }
  return out + ")";
}

std::vector<FamilyMember> TheoremFamilies(const Field& f) {
  RequireFinite(f, kMaxEnumerateOrder, "theorem families");
  const FieldElement zero = f.zero();
  const FieldElement one = f.one();
  std::vector<FamilyMember> out;
  if (f.characteristic() != 2) {
    out.push_back({{FamilyTag::kS1, std::nullopt},
                   SParams::FromIntegers(f, 0, 1, 1, 0, -1, 2)});
    out.push_back({{FamilyTag::kS2, std::nullopt},
                   SParams::FromIntegers(f, 0, 4, -4, -4, 4, 0)});
    for (const auto& t : MakeRepSystem(RelationId::kSim1, f).representatives) {
      for (int eps : {1, -1}) {
        for (int del : {1, -1}) {
          out.push_back({{FamilyTag::kS3, t, eps, del},
                         {zero, f.FromInteger(eps) * t, t, zero,
                          f.FromInteger(del) * t, zero}});
        }
      }
    }
    const FieldElement quarter = f.FromInteger(4).inverse();
    for (const auto& t : f.NonzeroElements()) {
      if (t == one || t == -one) continue;
      out.push_back({{FamilyTag::kS4, t},
                     {zero, (one + t) * (one + t) * quarter,
                      (t * t - one) * quarter, one, (one - t * t) * quarter,
                      t}});
    }
    return out;
  }
  for (const auto& t : MakeRepSystem(RelationId::kSim2, f).representatives) {
    out.push_back({{FamilyTag::kS1p, t}, {zero, t, t, zero, t, one}});
  }
  for (const auto& t : MakeRepSystem(RelationId::kSim3, f).representatives) {
    out.push_back({{FamilyTag::kS2p, t}, {zero, t, t, zero, t, zero}});
  }
  for (const auto& t : MakeRepSystem(RelationId::kSim4, f).representatives) {
    out.push_back({{FamilyTag::kS3p, t}, {zero, t, t, t, t, zero}});
  }
  for (const auto& t : f.NonzeroElements()) {
    if (t == one) continue;
    const FieldElement inv = (one + t * t).inverse();
    out.push_back({{FamilyTag::kS4p, t},
                   {zero, t * t * inv, t * inv, one, t * inv, one}});
  }
  return out;
}

std::size_t ExpectedClassCount(const Field& f) {
  const std::size_t q = f.order();
  if (f.characteristic() != 2) return q + 7;
  return q == 2 ? 3 : q + 3;
}

ClassificationReport VerifyClassification(const Field& field,
                                          const VerifyOptions& options) {
  RequireFinite(field, MaxVerifyOrder(), "verification");
  ClassificationReport r(field);
  const SubclassInventory inv =
      EnumerateSubclasses(field, ScanOptions{options.jobs});
  if (!inv.scanned) {
    throw FieldTooLargeError("verification needs the direct scan, which is "
                             "disabled above the scan limit");
  }
  for (int i = 1; i <= 4; ++i) r.subclass_sizes[i] = inv.scan[i].size();
  r.inventory_consistent = inv.Consistent();
  if (!r.inventory_consistent) {
    r.failures.push_back("closed-form subclasses differ from the direct scan");
  }
  std::vector<SParams> ecs = inv.ScanUnion();
  r.ecs011_size = ecs.size();
  const SearchOptions search{options.jobs};
  r.classes = IsoClasses(ecs, field, search);
  r.predicted = TheoremFamilies(field);
  const std::size_t n = r.predicted.size();

  // (a)
  r.members_valid = true;
  for (const auto& m : r.predicted) {
    const bool ok = IsEndoCommutative(m.params) &&
                    TypeOf(m.params) == AlgebraType::kII1 &&
                    !IsCurled(m.params.to_structure_matrix());
    if (!ok) {
      r.members_valid = false;
      r.failures.push_back(m.label.ToString() + " " + m.params.ToString() +
                           " is not an endo-commutative straight II1 algebra");
    }
  }

  // Locate predicted members among the classes.
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> where;
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    for (std::size_t m = 0; m < r.classes[c].members.size(); ++m) {
      where.emplace(Pack(CodesOf(r.classes[c].members[m].params)),
                    std::make_pair(c, m));
    }
  }
  r.class_predicted_count.assign(r.classes.size(), 0);
  for (const auto& m : r.predicted) {
    auto it = where.find(Pack(CodesOf(m.params)));
    if (it == where.end()) {
      r.predicted_class.emplace_back();
      r.predicted_witness.emplace_back();
      continue;
    }
    const auto [c, idx] = it->second;
    r.predicted_class.emplace_back(c);
    r.predicted_witness.emplace_back(r.classes[c].members[idx].witness);
    ++r.class_predicted_count[c];
  }

  // (b) by an exhausted orbit search from each predicted member.
  std::unordered_map<std::uint64_t, std::size_t> predicted_index;
  for (std::size_t i = 0; i < n; ++i) {
    predicted_index.emplace(Pack(CodesOf(r.predicted[i].params)), i);
  }
  const CodeOps o(field);
  r.pairwise_distinct = predicted_index.size() == n;
  if (!r.pairwise_distinct) {
    r.failures.push_back("predicted family members repeat a tuple");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> hits(n, kNoHit);
    r.transforms_searched += OrbitScan(o, MatrixCodes(r.predicted[i].params),
                                       predicted_index, hits, options.jobs);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (hits[j] == kNoHit) continue;
      r.pairwise_distinct = false;
      r.isomorphic_predicted_pairs.push_back(
          {i, j, TransformFromIndex(field, hits[j])});
      r.failures.push_back(r.predicted[i].label.ToString() + " is isomorphic to " +
                           r.predicted[j].label.ToString());
    }
  }

  // (c)
  r.count_matches = r.classes.size() == n;
  if (!r.count_matches) {
    r.failures.push_back("computed " + std::to_string(r.classes.size()) +
                         " classes but " + std::to_string(n) +
                         " predicted members");
  }

  // (d)
  r.bijective = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.predicted_class[i]) {
      r.bijective = false;
      r.failures.push_back(r.predicted[i].label.ToString() +
                           " lies in no computed class");
    }
  }
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    if (r.class_predicted_count[c] != 1) {
      r.bijective = false;
      r.failures.push_back("class of " + r.classes[c].representative.ToString() +
                           " holds " + std::to_string(r.class_predicted_count[c]) +
                           " predicted members");
    }
  }
  return r;
}

}  // namespace endoclass
