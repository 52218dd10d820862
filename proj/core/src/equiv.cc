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

#include "endoclass/equiv.h"

#include <algorithm>
#include <map>

namespace endoclass {

namespace {

constexpr int kMaxDegreeBound = 16;

bool IsRationalFunctionField(const Field& f) {
  return f.kind() == FieldKind::kRationalFunctionsF2;
}

// W(t -> u) followed by W(u -> v) gives W(t -> v).
Sim3Witness Compose(const Sim3Witness& first, const Sim3Witness& second) {
  return {second.x * first.x, second.y * first.x + first.y};
}

// W(t -> u) turned into W(u -> t).
Sim3Witness Reverse(const Sim3Witness& w) {
  const FieldElement inv = w.x.inverse();
  return {inv, w.y * inv};
}

std::optional<FieldElement> SolveArtinSchreier(const FieldElement& target) {
  const Field f = target.field();
  for (const FieldElement& x : f.Elements()) {
    if (x * x + x == target) return x;
  }
  return std::nullopt;
}

RelationResult FromSquare(const SquareResult& sq) {
  RelationResult r;
  r.decision = sq.decision;
  if (sq.is_square()) r.witness = SquareRootWitness{*sq.witness};
  return r;
}

}  // namespace

std::string_view RelationName(RelationId rel) {
  switch (rel) {
    case RelationId::kSim1: return "sim1";
    case RelationId::kSim2: return "sim2";
    case RelationId::kSim3: return "sim3";
    case RelationId::kSim4: return "sim4";
    case RelationId::kSim5: return "sim5";
  }
  return "?";
}

std::optional<RelationId> ParseRelationName(std::string_view name) {
  for (RelationId r : {RelationId::kSim1, RelationId::kSim2, RelationId::kSim3,
                       RelationId::kSim4, RelationId::kSim5}) {
    if (RelationName(r) == name) return r;
  }
  return std::nullopt;
}

void CheckRelationField(RelationId rel, const Field& field) {
  const bool char2 = field.characteristic() == 2;
  switch (rel) {
    case RelationId::kSim1:
      return;
    case RelationId::kSim2:
    case RelationId::kSim3:
    case RelationId::kSim4:
      if (!char2) {
        throw CarrierError(std::string(RelationName(rel)) +
                           " is defined only in characteristic 2, not over " +
                           field.spec());
      }
      return;
    case RelationId::kSim5:
      if (char2) {
        throw CarrierError("sim5 is defined only outside characteristic 2");
      }
      return;
  }
}

bool InCarrier(RelationId rel, const FieldElement& t) {
  if (t.is_zero()) return false;
  if (rel == RelationId::kSim5) {
    return t != -t.field().FromInteger(4);
  }
  return true;
}

FieldElement RelationTarget(RelationId rel, const FieldElement& t,
                            const FieldElement& t1) {
  switch (rel) {
    case RelationId::kSim1:
      return t / t1;
    case RelationId::kSim2:
      return t + t1;
    case RelationId::kSim4:
      return t.inverse() + t1.inverse();
    case RelationId::kSim5: {
      const FieldElement four = t.field().FromInteger(4);
      return t1 * (four + t) / (t * (four + t1));
    }
    case RelationId::kSim3:
      break;
  }
  throw std::logic_error("sim3 has no single target value");
}

bool VerifyWitness(RelationId rel, const FieldElement& t,
                   const FieldElement& t1, const RelationWitness& w) {
  switch (rel) {
    case RelationId::kSim1:
    case RelationId::kSim5: {
      const auto* s = std::get_if<SquareRootWitness>(&w);
      return s != nullptr && !s->s.is_zero() &&
             s->s * s->s == RelationTarget(rel, t, t1);
    }
    case RelationId::kSim2:
    case RelationId::kSim4: {
      const auto* a = std::get_if<ArtinSchreierWitness>(&w);
      return a != nullptr && a->x * a->x + a->x == RelationTarget(rel, t, t1);
    }
    case RelationId::kSim3: {
      const auto* p = std::get_if<Sim3Witness>(&w);
      return p != nullptr && !p->x.is_zero() &&
             (t1 * p->x * p->x + p->y * p->y + t).is_zero();
    }
  }
  return false;
}

std::pair<FieldElement, Sim3Witness> Sim3CanonicalClass(const FieldElement& t) {
  const Field f = t.field();
  if (!IsRationalFunctionField(f)) {
    throw UnsupportedError("Sim3CanonicalClass works over F2(X)");
  }
  if (t.is_zero()) throw CarrierError("sim3 carrier excludes 0");
  const auto [num, den] = t.rational_function();
  const GF2Poly one = GF2Poly::One();
  // n/d ~ n*d via x = 1/d, y = 0.
  const Sim3Witness to_product{f.FromRationalFunction(one, den), f.zero()};
  const GF2Poly product = num * den;
  const auto split = product.SplitOddEven();
  const FieldElement odd = f.FromRationalFunction(split.odd_root, one);
  const FieldElement even = f.FromRationalFunction(split.even_root, one);
  if (product.has_odd_degree_term()) {
    // X*O^2 + E^2 + P = 0.
    return {f.Generator(), Compose(to_product, Sim3Witness{odd, even})};
  }
  // 1*E^2 + 0^2 + P = 0.
  return {f.one(), Compose(to_product, Sim3Witness{even, f.zero()})};
}

RelationResult Related(RelationId rel, const FieldElement& t,
                       const FieldElement& t1, const SquareOptions& options) {
  const Field f = t.field();
  if (!(t1.field() == f)) {
    throw FieldMismatchError("Related: arguments from different fields");
  }
  CheckRelationField(rel, f);
  if (!InCarrier(rel, t) || !InCarrier(rel, t1)) {
    throw CarrierError(std::string(RelationName(rel)) + ": " + t.ToString() +
                       " or " + t1.ToString() + " lies outside the carrier");
  }
  switch (rel) {
    case RelationId::kSim1:
    case RelationId::kSim5:
      return FromSquare(f.IsSquare(RelationTarget(rel, t, t1), options));
    case RelationId::kSim2:
    case RelationId::kSim4: {
      if (!f.is_finite()) {
        throw UnsupportedError(
            std::string(RelationName(rel)) + " over " + f.spec() +
            " is not decidable here; use the bounded refutation search");
      }
      RelationResult r;
      if (auto x = SolveArtinSchreier(RelationTarget(rel, t, t1))) {
        r.decision = Decision::kYes;
        r.witness = ArtinSchreierWitness{*x};
      }
      return r;
    }
    case RelationId::kSim3: {
      RelationResult r;
      if (f.is_finite()) {
        // y = 0 and x^2 = t/t', always solvable in a finite field of
        // characteristic 2.
        const SquareResult sq = f.IsSquare(t / t1);
        r.decision = sq.decision;
        if (sq.is_square()) r.witness = Sim3Witness{*sq.witness, f.zero()};
        return r;
      }
      if (!IsRationalFunctionField(f)) {
        throw UnsupportedError("sim3 is supported over finite fields and F2(X)");
      }
      const auto [ct, wt] = Sim3CanonicalClass(t);
      const auto [ct1, wt1] = Sim3CanonicalClass(t1);
      if (ct != ct1) return r;
      r.decision = Decision::kYes;
      r.witness = Compose(wt, Reverse(wt1));
      return r;
    }
  }
  return {};
}

FieldElement RepSystem::ClassOf(const FieldElement& t) const {
  if (!class_map.empty()) {
    auto it = std::lower_bound(
        class_map.begin(), class_map.end(), t,
        [](const auto& entry, const FieldElement& v) { return entry.first < v; });
    if (it == class_map.end() || it->first != t) {
      throw CarrierError(t.ToString() + " is not in the carrier of " +
                         std::string(RelationName(relation)));
    }
    return it->second;
  }
  if (relation == RelationId::kSim3 && IsRationalFunctionField(field)) {
    return Sim3CanonicalClass(t).first;
  }
  throw UnsupportedError("no class map for this representative system");
}

std::vector<std::vector<FieldElement>> RepSystem::Classes() const {
  if (class_map.empty()) {
    throw UnsupportedError("class lists need a finite field");
  }
  std::vector<std::vector<FieldElement>> out(representatives.size());
  for (const auto& [element, rep] : class_map) {
    const auto idx = std::find(representatives.begin(), representatives.end(),
                               rep) - representatives.begin();
    out[static_cast<std::size_t>(idx)].push_back(element);
  }
  return out;
}

RepSystem MakeRepSystem(RelationId rel, const Field& field) {
  CheckRelationField(rel, field);
  RepSystem out{rel, field, {}, {}};
  if (!field.is_finite()) {
    if (rel == RelationId::kSim3 && IsRationalFunctionField(field)) {
      out.representatives = {field.one(), field.Generator()};
      return out;
    }
    throw UnsupportedError("representative systems need a finite field");
  }
  std::vector<FieldElement> carrier;
  for (const FieldElement& t : field.NonzeroElements()) {
    if (InCarrier(rel, t)) carrier.push_back(t);
  }
  std::vector<std::optional<FieldElement>> assigned(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (assigned[i]) continue;
    out.representatives.push_back(carrier[i]);
    assigned[i] = carrier[i];
    for (std::size_t j = i + 1; j < carrier.size(); ++j) {
      if (!assigned[j] && Related(rel, carrier[i], carrier[j]).related()) {
        assigned[j] = carrier[i];
      }
    }
  }
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    out.class_map.emplace_back(carrier[i], *assigned[i]);
  }
  return out;
}

BoundedSearchResult BoundedRefutationSearch(RelationId rel,
                                            const FieldElement& t,
                                            const FieldElement& t1,
                                            int degree_bound) {
  const Field f = t.field();
  if (!IsRationalFunctionField(f) || !(t1.field() == f)) {
    throw UnsupportedError("bounded refutation search works over F2(X)");
  }
  if (rel != RelationId::kSim2 && rel != RelationId::kSim4) {
    throw UnsupportedError("bounded refutation search covers sim2 and sim4");
  }
  if (degree_bound < 0 || degree_bound > kMaxDegreeBound) {
    throw std::invalid_argument("degree bound must lie in [0, " +
                                std::to_string(kMaxDegreeBound) + "]");
  }
  if (t.is_zero() || t1.is_zero()) {
    throw CarrierError("bounded refutation search: carrier excludes 0");
  }
  const auto [num, den] = RelationTarget(rel, t, t1).rational_function();
  // x = p/q solves x^2 + x = num/den iff (p^2 + pq) den = num q^2.
  const std::uint64_t limit = std::uint64_t{1} << (degree_bound + 1);
  std::vector<GF2Poly> polys(limit);
  std::vector<GF2Poly> squares(limit);
  for (std::uint64_t c = 0; c < limit; ++c) {
    polys[c] = GF2Poly::FromCode(c);
    squares[c] = polys[c].Square();
  }
  BoundedSearchResult result;
  for (std::uint64_t qc = 1; qc < limit; ++qc) {
    const GF2Poly rhs = num * squares[qc];
    for (std::uint64_t pc = 0; pc < limit; ++pc) {
      ++result.candidates;
      if ((squares[pc] + polys[pc] * polys[qc]) * den == rhs) {
        result.found = true;
        result.x = f.FromRationalFunction(polys[pc], polys[qc]);
        return result;
      }
    }
  }
  return result;
}

}  // namespace endoclass
