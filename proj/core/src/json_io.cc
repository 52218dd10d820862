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

#include "endoclass/json_io.h"

#include <cctype>

namespace endoclass {

using nlohmann::json;

namespace {

constexpr const char* kKeys[6] = {"p", "q", "a", "b", "c", "d"};

}  // namespace

json ToJson(const FieldElement& e) { return e.ToString(); }

json ToJson(const SParams& s) {
  json j = json::object();
  const auto v = s.values();
  for (int i = 0; i < 6; ++i) j[kKeys[i]] = v[i].ToString();
  return j;
}

json ToJson(const StructureMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) rows.push_back({r[0].ToString(), r[1].ToString()});
  return {{"field", m.field().spec()}, {"rows", rows}};
}

json ToJson(const Transform& t) {
  return json::array({json::array({t.x.ToString(), t.y.ToString()}),
                      json::array({t.z.ToString(), t.w.ToString()})});
}

json ToJson(const RelationWitness& w) {
  if (const auto* s = std::get_if<SquareRootWitness>(&w)) {
    return {{"kind", "square_root"}, {"s", s->s.ToString()}};
  }
  if (const auto* a = std::get_if<ArtinSchreierWitness>(&w)) {
    return {{"kind", "artin_schreier"}, {"x", a->x.ToString()}};
  }
  if (const auto* p = std::get_if<Sim3Witness>(&w)) {
    return {{"kind", "pair"}, {"x", p->x.ToString()}, {"y", p->y.ToString()}};
  }
  return nullptr;
}

json ToJson(const RepSystem& r) {
  json j = {{"relation", std::string(RelationName(r.relation))},
            {"field", r.field.spec()}};
  json reps = json::array();
  for (const auto& t : r.representatives) reps.push_back(t.ToString());
  j["representatives"] = reps;
  if (!r.class_map.empty()) {
    json classes = json::object();
    const auto lists = r.Classes();
    for (std::size_t i = 0; i < lists.size(); ++i) {
      json members = json::array();
      for (const auto& m : lists[i]) members.push_back(m.ToString());
      classes[r.representatives[i].ToString()] = members;
    }
    j["classes"] = classes;
  } else {
    j["classes"] = nullptr;
    j["rule"] = "odd-degree term of numerator*denominator selects X";
  }
  return j;
}

json ToJson(const FamilyLabel& label) {
  json j = {{"tag", label.TagName()}, {"label", label.ToString()}};
  if (label.t) j["t"] = label.t->ToString();
  if (label.epsilon != 0) {
    j["epsilon"] = label.epsilon;
    j["delta"] = label.delta;
  }
  return j;
}

json ToJson(const std::vector<IsoClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& m : c.members) {
      members.push_back({{"params", ToJson(m.params)},
                         {"witness", ToJson(m.witness)}});
    }
    out.push_back({{"representative", ToJson(c.representative)},
                   {"size", c.members.size()},
                   {"members", members}});
  }
  return out;
}

json ToJson(const ClassificationReport& r) {
  json families = json::array();
  for (std::size_t i = 0; i < r.predicted.size(); ++i) {
    json f = ToJson(r.predicted[i].label);
    f["params"] = ToJson(r.predicted[i].params);
    f["class"] = r.predicted_class[i] ? json(*r.predicted_class[i]) : json();
    f["witness"] =
        r.predicted_witness[i] ? ToJson(*r.predicted_witness[i]) : json();
    families.push_back(f);
  }
  json classes = ToJson(r.classes);
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    json predicted = json::array();
    for (std::size_t i = 0; i < r.predicted.size(); ++i) {
      if (r.predicted_class[i] == c) predicted.push_back(i);
    }
    classes[c]["predicted"] = predicted;
  }
  json pairs = json::array();
  for (const auto& p : r.isomorphic_predicted_pairs) {
    pairs.push_back({{"first", p.first}, {"second", p.second},
                     {"witness", ToJson(p.witness)}});
  }
  json sizes = json::object();
  for (int i = 1; i <= 4; ++i) sizes[std::to_string(i)] = r.subclass_sizes[i];
  return {
      {"version", std::string(kVersion)},
      {"field", r.field.spec()},
      {"verdict", r.pass() ? "pass" : "fail"},
      {"class_count", r.classes.size()},
      {"predicted_count", r.predicted.size()},
      {"expected_class_count", ExpectedClassCount(r.field)},
      {"ecs011_size", r.ecs011_size},
      {"subclass_sizes", sizes},
      {"transforms_searched", r.transforms_searched},
      {"checks",
       {{"inventory_consistent", r.inventory_consistent},
        {"members_valid", r.members_valid},
        {"pairwise_distinct", r.pairwise_distinct},
        {"count_matches", r.count_matches},
        {"bijective", r.bijective}}},
      {"families", families},
      {"classes", classes},
      {"isomorphic_predicted_pairs", pairs},
      {"failures", r.failures},
  };
}

FieldElement ElementFromJson(const Field& field, const json& j) {
  if (j.is_string()) return field.ParseElement(j.get<std::string>());
  if (j.is_number_integer()) return field.ParseElement(j.dump());
  throw FieldError("expected a field element, got " + j.dump());
}

SParams SParamsFromJson(const Field& field, const json& j) {
  std::array<FieldElement, 6> v;
  if (j.is_object()) {
    for (int i = 0; i < 6; ++i) {
      if (!j.contains(kKeys[i])) {
        throw FieldError(std::string("SParams is missing \"") + kKeys[i] + "\"");
      }
      v[i] = ElementFromJson(field, j.at(kKeys[i]));
    }
    if (j.size() != 6) throw FieldError("SParams has unexpected keys");
  } else if (j.is_array() && j.size() == 6) {
    for (int i = 0; i < 6; ++i) v[i] = ElementFromJson(field, j[i]);
  } else {
    throw FieldError("SParams must be an object or a 6-element array");
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

Transform TransformFromJson(const Field& field, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
      !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
    throw FieldError("transform must be [[x, y], [z, w]]");
  }
  return {ElementFromJson(field, j[0][0]), ElementFromJson(field, j[0][1]),
          ElementFromJson(field, j[1][0]), ElementFromJson(field, j[1][1])};
}

StructureMatrix StructureMatrixFromJson(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("rows")) {
    throw FieldError("structure matrix needs \"field\" and \"rows\"");
  }
  const Field field = Field::Parse(j.at("field").get<std::string>());
  const json& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != 4) {
    throw FieldError("structure matrix needs 4 rows");
  }
  std::array<StructureMatrix::Row, 4> out;
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 2) {
      throw FieldError("structure matrix rows have 2 entries");
    }
    out[i] = {ElementFromJson(field, rows[i][0]),
              ElementFromJson(field, rows[i][1])};
  }
  return StructureMatrix(out);
}

SParams ParseSParams(const Field& field, std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '{' || text[i] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw FieldError(std::string("malformed JSON: ") + e.what());
    }
    return SParamsFromJson(field, j);
  }
  return SParams::Parse(field, text);
}

}  // namespace endoclass
