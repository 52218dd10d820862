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

// JSON forms of the library's values. Field elements are always written as
// strings in the field's element syntax; readers also accept integers.

#ifndef ENDOCLASS_JSON_IO_H_
#define ENDOCLASS_JSON_IO_H_

#include <nlohmann/json.hpp>
#include <string_view>
#include <vector>

#include "endoclass/algebra.h"
#include "endoclass/classify.h"
#include "endoclass/equiv.h"

namespace endoclass {

inline constexpr std::string_view kVersion = "0.1.0";

nlohmann::json ToJson(const FieldElement& e);
// {"p": .., "q": .., "a": .., "b": .., "c": .., "d": ..}
nlohmann::json ToJson(const SParams& s);
// {"field": spec, "rows": [[e^2], [f^2], [ef], [fe]]}
nlohmann::json ToJson(const StructureMatrix& m);
// [[x, y], [z, w]]
nlohmann::json ToJson(const Transform& t);
nlohmann::json ToJson(const RelationWitness& w);
nlohmann::json ToJson(const RepSystem& r);
nlohmann::json ToJson(const FamilyLabel& label);
nlohmann::json ToJson(const std::vector<IsoClass>& classes);
nlohmann::json ToJson(const ClassificationReport& report);

// Throws FieldError on malformed input.
FieldElement ElementFromJson(const Field& field, const nlohmann::json& j);
SParams SParamsFromJson(const Field& field, const nlohmann::json& j);
Transform TransformFromJson(const Field& field, const nlohmann::json& j);
StructureMatrix StructureMatrixFromJson(const nlohmann::json& j);

// Accepts a JSON object or array, or a bare comma-separated tuple.
SParams ParseSParams(const Field& field, std::string_view text);

}  // namespace endoclass

#endif  // ENDOCLASS_JSON_IO_H_
