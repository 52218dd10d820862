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

#include "cli.h"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "endoclass/algebra.h"
#include "endoclass/classify.h"
#include "endoclass/equiv.h"
#include "endoclass/iso.h"
#include "endoclass/json_io.h"

namespace endoclass::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string field;
  std::string format;
  std::string type;
  int subclass = 0;
  unsigned jobs = 1;
  std::string relation;
  bool reps = false;
  std::vector<std::string> test;
  int degree_bound = 4;
  std::string lhs;
  std::string rhs;
  std::string witness;
  std::string algebra;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json Versioned(json j) {
  j["version"] = std::string(kVersion);
  return j;
}

void PrintJson(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

unsigned Jobs(const Options& o) {
  if (o.jobs != 0) return o.jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

Field RequireField(const Options& o) {
  if (o.field.empty()) throw UsageError("--field is required");
  return Field::Parse(o.field);
}

// Expands --type into concrete types; "I" covers the three type-I patterns.
std::vector<AlgebraType> Types(const std::string& name) {
  if (name.empty()) return {AlgebraType::kII1};
  if (name == "I") {
    return {AlgebraType::kI001, AlgebraType::kI010, AlgebraType::kI100};
  }
  if (auto t = ParseTypeName(name)) return {*t};
  throw UsageError("unknown --type '" + name + "'");
}

std::vector<SParams> Algebras(const Field& field, const Options& o) {
  const auto types = Types(o.type);
  const bool ii1 = types.size() == 1 && types[0] == AlgebraType::kII1;
  if (o.subclass != 0 && !ii1) {
    throw UsageError("--subclass applies to --type II1 only");
  }
  std::vector<SParams> out;
  if (ii1) {
    const SubclassInventory inv =
        EnumerateSubclasses(field, ScanOptions{Jobs(o)});
    const auto& lists = inv.scanned ? inv.scan : inv.closed_form;
    for (int i = 1; i <= 4; ++i) {
      if (o.subclass == 0 || o.subclass == i) {
        out.insert(out.end(), lists[i].begin(), lists[i].end());
      }
    }
  } else {
    for (AlgebraType t : types) {
      auto part = ScanEndoCommutative(field, t, ScanOptions{Jobs(o)});
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string TypeLabel(const Options& o) { return o.type.empty() ? "II1" : o.type; }

// --- subcommands ----------------------------------------------------------

int CmdFields(const Options& o, std::ostream& out) {
  if (o.field.empty()) {
    json specs = json::array();
    for (std::uint32_t q = 2; q <= 64; ++q) {
      try {
        specs.push_back(Field::Parse("F" + std::to_string(q)).spec());
      } catch (const FieldError&) {
      }
    }
    json j = {{"syntax", {"Fp", "Fp^k/modulus", "Fq", "Q", "F2(X)"}},
              {"finite_fields_up_to_64", specs}};
    if (o.format == "text") {
      for (const auto& s : specs) out << s.get<std::string>() << "\n";
      return kExitOk;
    }
    PrintJson(out, Versioned(j));
    return kExitOk;
  }
  const Field f = Field::Parse(o.field);
  json j = {{"field", f.spec()},
            {"characteristic", f.characteristic()},
            {"finite", f.is_finite()}};
  if (f.is_finite()) {
    j["order"] = f.order();
    json elems = json::array();
    json squares = json::array();
    for (const auto& e : f.Elements()) {
      elems.push_back(e.ToString());
      if (!e.is_zero() && f.IsSquare(e).is_square()) squares.push_back(e.ToString());
    }
    j["elements"] = elems;
    j["nonzero_squares"] = squares;
  }
  if (o.format == "text") {
    out << f.spec() << " characteristic " << f.characteristic();
    if (f.is_finite()) {
      out << " order " << f.order() << "\n";
      for (const auto& e : j["elements"]) out << e.get<std::string>() << "\n";
    } else {
      out << " (infinite)\n";
    }
    return kExitOk;
  }
  PrintJson(out, Versioned(j));
  return kExitOk;
}

int CmdEnumerate(const Options& o, std::ostream& out) {
  const Field f = RequireField(o);
  const auto algebras = Algebras(f, o);
  const std::string format = o.format.empty() ? "tsv" : o.format;
  if (format == "tsv") {
    out << "p\tq\ta\tb\tc\td\n";
    for (const auto& s : algebras) {
      const auto v = s.values();
      for (int i = 0; i < 6; ++i) out << (i ? "\t" : "") << v[i].ToString();
      out << "\n";
    }
  } else if (format == "text") {
    for (const auto& s : algebras) out << s.ToString() << "\n";
  } else {
    json list = json::array();
    for (const auto& s : algebras) list.push_back(ToJson(s));
    PrintJson(out, Versioned({{"field", f.spec()},
                              {"type", TypeLabel(o)},
                              {"subclass", o.subclass ? json(o.subclass) : json()},
                              {"count", algebras.size()},
                              {"algebras", list}}));
  }
  return kExitOk;
}

int CmdIso(const Options& o, std::ostream& out) {
  const Field f = RequireField(o);
  if (o.lhs.empty() || o.rhs.empty()) throw UsageError("--lhs and --rhs are required");
  const SParams lhs = ParseSParams(f, o.lhs);
  const SParams rhs = ParseSParams(f, o.rhs);
  const bool as_json = o.format == "json";
  if (!o.witness.empty()) {
    const Transform x = TransformFromJson(f, json::parse(o.witness));
    if (!x.invertible()) throw UsageError("--witness is singular");
    const bool ok = CheckIsoSystem(lhs, rhs, x);
    if (as_json) {
      PrintJson(out, Versioned({{"field", f.spec()},
                                {"lhs", ToJson(lhs)},
                                {"rhs", ToJson(rhs)},
                                {"witness", ToJson(x)},
                                {"witness_verifies", ok}}));
    } else {
      out << (ok ? "witness verifies" : "witness fails") << "\n";
    }
    return ok ? kExitOk : kExitNegative;
  }
  if (!f.is_finite()) {
    throw UnsupportedError(
        "isomorphism search needs a finite field; pass --witness to check a "
        "candidate transformation matrix");
  }
  const auto found = AreIsomorphic(lhs.to_structure_matrix(),
                                   rhs.to_structure_matrix(),
                                   SearchOptions{Jobs(o)});
  if (as_json) {
    PrintJson(out, Versioned({{"field", f.spec()},
                              {"lhs", ToJson(lhs)},
                              {"rhs", ToJson(rhs)},
                              {"isomorphic", found.has_value()},
                              {"witness", found ? ToJson(*found) : json()}}));
  } else {
    out << (found ? found->ToString() : "not isomorphic") << "\n";
  }
  return found ? kExitOk : kExitNegative;
}

int CmdEquiv(const Options& o, std::ostream& out) {
  const Field f = RequireField(o);
  const auto rel = ParseRelationName(o.relation);
  if (!rel) throw UsageError("--relation must be one of sim1..sim5");
  if (o.reps == !o.test.empty()) {
    throw UsageError("equiv needs exactly one of --reps or --test t t'");
  }
  if (o.reps) {
    const RepSystem r = MakeRepSystem(*rel, f);
    if (o.format == "text") {
      if (r.class_map.empty()) {
        for (const auto& t : r.representatives) out << t.ToString() << "\n";
      } else {
        const auto classes = r.Classes();
        for (std::size_t i = 0; i < classes.size(); ++i) {
          out << r.representatives[i].ToString() << ":";
          for (const auto& m : classes[i]) out << " " << m.ToString();
          out << "\n";
        }
      }
    } else {
      PrintJson(out, Versioned(ToJson(r)));
    }
    return kExitOk;
  }
  const FieldElement t = f.ParseElement(o.test[0]);
  const FieldElement t1 = f.ParseElement(o.test[1]);
  json j = {{"relation", o.relation},
            {"field", f.spec()},
            {"t", t.ToString()},
            {"t_prime", t1.ToString()}};
  bool positive = false;
  std::string line;
  if (f.kind() == FieldKind::kRationalFunctionsF2 &&
      (*rel == RelationId::kSim2 || *rel == RelationId::kSim4)) {
    const auto r = BoundedRefutationSearch(*rel, t, t1, o.degree_bound);
    positive = r.found;
    j["method"] = "bounded_search";
    j["degree_bound"] = o.degree_bound;
    j["candidates"] = r.candidates;
    j["decision"] = r.found ? "witness found" : "no witness up to bound";
    j["witness"] = r.found ? ToJson(RelationWitness{ArtinSchreierWitness{*r.x}})
                           : json();
    line = r.found ? "witness found: x = " + r.x->ToString()
                   : "no witness up to degree bound " +
                         std::to_string(o.degree_bound);
  } else {
    const RelationResult r = Related(*rel, t, t1);
    positive = r.related();
    const char* decision = r.decision == Decision::kYes ? "related"
                           : r.decision == Decision::kNo ? "not related"
                                                          : "undecided";
    j["method"] = "decision";
    j["decision"] = decision;
    j["witness"] = ToJson(r.witness);
    line = decision;
    if (positive) line += " " + ToJson(r.witness).dump();
  }
  if (o.format == "text") {
    out << line << "\n";
  } else {
    PrintJson(out, Versioned(j));
  }
  return positive ? kExitOk : kExitNegative;
}

int CmdClasses(const Options& o, std::ostream& out) {
  const Field f = RequireField(o);
  const auto algebras = Algebras(f, o);
  const auto classes = IsoClasses(algebras, f, SearchOptions{Jobs(o)});
  if (o.format == "text" || o.format == "tsv") {
    if (o.format == "tsv") out << "class\trepresentative\tsize\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      if (o.format == "tsv") {
        out << i << "\t" << c.representative.ToString() << "\t"
            << c.members.size() << "\n";
      } else {
        out << c.representative.ToString() << "  (" << c.members.size()
            << " members)\n";
      }
    }
    return kExitOk;
  }
  PrintJson(out, Versioned({{"field", f.spec()},
                            {"type", TypeLabel(o)},
                            {"subclass", o.subclass ? json(o.subclass) : json()},
                            {"algebra_count", algebras.size()},
                            {"class_count", classes.size()},
                            {"classes", ToJson(classes)}}));
  return kExitOk;
}

void SummaryTable(const ClassificationReport& r, std::ostream& os) {
  os << "field " << r.field.spec() << ": " << r.classes.size()
     << " classes, " << r.predicted.size() << " predicted, verdict "
     << (r.pass() ? "pass" : "fail") << "\n";
  std::size_t label_w = 6, tuple_w = 14;
  for (std::size_t i = 0; i < r.predicted.size(); ++i) {
    label_w = std::max(label_w, r.predicted[i].label.ToString().size());
    tuple_w = std::max(tuple_w, r.predicted[i].params.ToString().size());
  }
  os << std::left << std::setw(static_cast<int>(label_w) + 2) << "family"
     << std::setw(static_cast<int>(tuple_w) + 2) << "representative"
     << std::setw(12) << "class size" << "witnesses\n";
  for (std::size_t i = 0; i < r.predicted.size(); ++i) {
    std::size_t size = 0, witnesses = 0;
    if (r.predicted_class[i]) {
      const auto& c = r.classes[*r.predicted_class[i]];
      size = c.members.size();
      witnesses = c.members.size();
    }
    os << std::left << std::setw(static_cast<int>(label_w) + 2)
       << r.predicted[i].label.ToString()
       << std::setw(static_cast<int>(tuple_w) + 2)
       << r.predicted[i].params.ToString() << std::setw(12) << size
       << witnesses << "\n";
  }
  for (const auto& f : r.failures) os << "FAIL: " << f << "\n";
}

int CmdVerify(const Options& o, std::ostream& out, std::ostream& err) {
  const Field f = RequireField(o);
  const ClassificationReport r = VerifyClassification(f, VerifyOptions{Jobs(o)});
  if (o.format == "text") {
    SummaryTable(r, out);
  } else {
    PrintJson(out, ToJson(r));
    SummaryTable(r, err);
  }
  return r.pass() ? kExitOk : kExitNegative;
}

int CmdTable(const Options& o, std::ostream& out) {
  const Field f = RequireField(o);
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  const SParams s = ParseSParams(f, o.algebra);
  const StructureMatrix m = s.to_structure_matrix();
  const bool ec = IsEndoCommutative(s);
  if (o.format == "json") {
    json j = {{"field", f.spec()},
              {"params", ToJson(s)},
              {"matrix", ToJson(m)},
              {"rank", Rank(m)},
              {"endo_commutative", ec},
              {"type", ec ? json(std::string(TypeName(TypeOf(s)))) : json()}};
    PrintJson(out, Versioned(j));
    return kExitOk;
  }
  out << s.ToString() << " over " << f.spec() << "\n" << m.TableString();
  out << "rank " << Rank(m) << ", "
      << (ec ? "endo-commutative, type " + std::string(TypeName(TypeOf(s)))
             : std::string("not endo-commutative"))
      << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Endo-commutative 2-dimensional algebras: arithmetic, "
               "isomorphism and classification checks",
               "endoclass"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "tsv", "text"};

  auto add_common = [&](CLI::App* sub, bool field_required) {
    auto* opt = sub->add_option("--field", o.field,
                                "Field: Fp, Fp^k/modulus, Fq, Q or F2(X)");
    if (field_required) opt->required();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(formats));
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")
        ->check(CLI::Range(0U, 256U));
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", o.type,
                    "I, I.001, I.010, I.100, II1, II2, II3 or III");
    sub->add_option("--subclass", o.subclass, "Subclass of II1")
        ->check(CLI::Range(1, 4));
  };

  auto* fields = app.add_subcommand("fields", "Describe a field or list fields");
  add_common(fields, false);

  auto* enumerate = app.add_subcommand(
      "enumerate", "List endo-commutative straight algebras of a type");
  add_common(enumerate, true);
  add_type(enumerate);

  auto* iso = app.add_subcommand("iso", "Decide or check an isomorphism");
  add_common(iso, true);
  iso->add_option("--lhs", o.lhs, "S(p,q,a,b,c,d) as JSON or a tuple")->required();
  iso->add_option("--rhs", o.rhs, "S(p,q,a,b,c,d) as JSON or a tuple")->required();
  iso->add_option("--witness", o.witness,
                  "Check [[x,y],[z,w]] instead of searching");

  auto* equiv = app.add_subcommand("equiv", "Equivalence relations on K*");
  add_common(equiv, true);
  equiv->add_option("--relation", o.relation, "sim1 .. sim5")
      ->required()
      ->check(CLI::IsMember({"sim1", "sim2", "sim3", "sim4", "sim5"}));
  equiv->add_flag("--reps", o.reps, "Print a complete representative system");
  equiv->add_option("--test", o.test, "Decide t ~ t'")->expected(2);
  equiv->add_option("--degree-bound", o.degree_bound,
                    "Degree bound for the F2(X) sim2/sim4 search")
      ->check(CLI::Range(0, 16));

  auto* classes = app.add_subcommand("classes", "Isomorphism classes of a type");
  add_common(classes, true);
  add_type(classes);

  auto* verify = app.add_subcommand(
      "verify", "Verify the type II1 classification over a finite field");
  add_common(verify, true);

  auto* table = app.add_subcommand("table", "Print a multiplication table");
  add_common(table, true);
  table->add_option("--algebra", o.algebra, "S(p,q,a,b,c,d) as JSON or a tuple")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*fields) return CmdFields(o, out);
    if (*enumerate) return CmdEnumerate(o, out);
    if (*iso) return CmdIso(o, out);
    if (*equiv) return CmdEquiv(o, out);
    if (*classes) return CmdClasses(o, out);
    if (*verify) return CmdVerify(o, out, err);
    if (*table) return CmdTable(o, out);
  } catch (const std::exception& e) {
    err << "endoclass: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace endoclass::cli
