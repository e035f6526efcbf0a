// Copyright 2026 The balcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "balcap/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "balcap/error.hpp"

namespace balcap {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, path + ": " + what);
}

std::string quoted(const std::string& key) { return "[\"" + key + "\"]"; }

const Json& member(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
  return *it;
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
}

void require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
}

void allow_only(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) schema_error(path, "unexpected field '" + key + "'");
  }
}

Rational rational_at(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

GroundSet labels_at(const Json& doc, const std::string& path) {
  const Json& labels = member(doc, path, "labels");
  require_array(labels, path + ".labels");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    names.push_back(string_at(labels[i], path + ".labels[" + std::to_string(i) + "]"));
  }
  try {
    return GroundSet(std::move(names));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kGroundTooLarge) throw;
    schema_error(path + ".labels", e.what());
  }
}

Subset set_at(const Json& j, const GroundSet& ground, const std::string& path) {
  require_array(j, path);
  Subset s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    const std::string label = string_at(j[i], item_path);
    const auto point = ground.index_of(label);
    if (!point) schema_error(item_path, "unknown label '" + label + "'");
    if (s.contains(*point)) schema_error(item_path, "label '" + label + "' repeated");
    s = s | Subset::singleton(*point);
  }
  return s;
}

// {"<label>": "p/q"} covering every point of the ground.
std::vector<Rational> point_values(const Json& doc, const GroundSet& ground) {
  require_object(doc, "$");
  allow_only(doc, "$", {"values"});
  const Json& values = member(doc, "$", "values");
  require_object(values, "$.values");
  std::vector<std::optional<Rational>> slots(ground.size());
  for (const auto& [label, value] : values.items()) {
    const std::string path = "$.values" + quoted(label);
    const auto point = ground.index_of(label);
    if (!point) schema_error(path, "unknown label '" + label + "'");
    slots[*point] = rational_at(value, path);
  }
  std::vector<Rational> out;
  for (int p = 0; p < ground.size(); ++p) {
    if (!slots[p]) schema_error("$.values", "missing value for label '" + ground.label(p) + "'");
    out.push_back(*slots[p]);
  }
  return out;
}

Json point_values_json(const GroundSet& ground, const std::vector<Rational>& values) {
  Json obj = Json::object();
  for (int p = 0; p < ground.size(); ++p) obj[ground.label(p)] = to_string(values[p]);
  return Json{{"values", obj}};
}

Json rationals_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

std::string relation_text(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return "<=";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kEqual: return "=";
  }
  return "?";
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json_text(buffer.str());
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, path.string() + ": " + e.what());
  }
}

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

Game game_from_json(const Json& doc, int max_points) {
  require_object(doc, "$");
  allow_only(doc, "$", {"labels", "capacity", "generators"});
  const GroundSet ground = labels_at(doc, "$");
  const bool dense_form = doc.contains("capacity");
  const bool generated_form = doc.contains("generators");
  if (dense_form == generated_form) {
    schema_error("$", "exactly one of 'capacity' or 'generators' is required");
  }
  if (generated_form) {
    const Json& gens = doc["generators"];
    require_array(gens, "$.generators");
    std::vector<Generator> generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string path = "$.generators[" + std::to_string(i) + "]";
      require_object(gens[i], path);
      allow_only(gens[i], path, {"set", "value"});
      generators.push_back({set_at(member(gens[i], path, "set"), ground, path + ".set"),
                            rational_at(member(gens[i], path, "value"), path + ".value")});
    }
    return GeneratedCapacity(ground, std::move(generators));
  }
  check_dense_size(ground, max_points);
  const Json& table = doc["capacity"];
  require_object(table, "$.capacity");
  std::map<Subset, Rational> entries;
  for (const auto& [key, value] : table.items()) {
    const std::string path = "$.capacity" + quoted(key);
    Subset s;
    try {
      s = ground.parse_key(key);
    } catch (const Error& e) {
      schema_error(path, e.what());
    }
    if (!entries.emplace(s, rational_at(value, path)).second) {
      schema_error(path, "subset listed twice");
    }
  }
  return validate_capacity(entries, ground, max_points);
}

const GroundSet& ground_of(const Game& game) {
  return std::visit([](const auto& g) -> const GroundSet& { return g.ground(); }, game);
}

Capacity dense(const Game& game, int max_points) {
  if (const auto* nu = std::get_if<Capacity>(&game)) return *nu;
  return realize(std::get<GeneratedCapacity>(game), max_points);
}

FuncOnX function_from_json(const Json& doc, const GroundSet& ground) {
  return FuncOnX{ground, point_values(doc, ground)};
}

ProbMeasure measure_from_json(const Json& doc, const GroundSet& ground) {
  return ProbMeasure(ground, point_values(doc, ground));
}

PointMap map_from_json(const Json& doc, const GroundSet& source) {
  require_object(doc, "$");
  allow_only(doc, "$", {"target", "images"});
  const Json& target_json = member(doc, "$", "target");
  require_array(target_json, "$.target");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < target_json.size(); ++i) {
    names.push_back(string_at(target_json[i], "$.target[" + std::to_string(i) + "]"));
  }
  std::optional<GroundSet> target;
  try {
    target.emplace(std::move(names));
  } catch (const Error& e) {
    schema_error("$.target", e.what());
  }
  const Json& images = member(doc, "$", "images");
  require_object(images, "$.images");
  std::vector<std::optional<int>> slots(source.size());
  for (const auto& [label, value] : images.items()) {
    const std::string path = "$.images" + quoted(label);
    const auto x = source.index_of(label);
    if (!x) schema_error(path, "unknown source label '" + label + "'");
    const std::string image = string_at(value, path);
    const auto y = target->index_of(image);
    if (!y) schema_error(path, "unknown target label '" + image + "'");
    slots[*x] = *y;
  }
  std::vector<int> out;
  for (int x = 0; x < source.size(); ++x) {
    if (!slots[x]) schema_error("$.images", "missing image for label '" + source.label(x) + "'");
    out.push_back(*slots[x]);
  }
  return PointMap(source, *target, std::move(out));
}

SecondLevelCapacity second_level_from_json(const Json& doc) {
  require_object(doc, "$");
  allow_only(doc, "$", {"labels", "second_level_generators"});
  const GroundSet ground = labels_at(doc, "$");
  const Json& gens = member(doc, "$", "second_level_generators");
  require_array(gens, "$.second_level_generators");
  std::vector<SecondLevelGenerator> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string path = "$.second_level_generators[" + std::to_string(i) + "]";
    require_object(gens[i], path);
    allow_only(gens[i], path, {"set", "threshold", "value"});
    generators.push_back(
        {set_at(member(gens[i], path, "set"), ground, path + ".set"),
         rational_at(member(gens[i], path, "threshold"), path + ".threshold"),
         rational_at(member(gens[i], path, "value"), path + ".value")});
  }
  return SecondLevelCapacity(ground, std::move(generators));
}

Json labels_json(const GroundSet& ground, Subset s) {
  Json arr = Json::array();
  for (int p : s.points()) arr.push_back(ground.label(p));
  return arr;
}

Json to_json(const Capacity& nu) {
  Json table = Json::object();
  for (std::uint32_t m = 0; m < nu.values().size(); ++m) {
    table[nu.ground().key(Subset(m))] = to_string(nu(Subset(m)));
  }
  return Json{{"labels", nu.ground().labels()}, {"capacity", table}};
}

Json to_json(const GeneratedCapacity& generated) {
  Json gens = Json::array();
  for (const auto& g : generated.generators()) {
    gens.push_back({{"set", labels_json(generated.ground(), g.set)}, {"value", to_string(g.value)}});
  }
  return Json{{"labels", generated.ground().labels()}, {"generators", gens}};
}

Json to_json(const Game& game) {
  return std::visit([](const auto& g) { return to_json(g); }, game);
}

Json to_json(const FuncOnX& f) { return point_values_json(f.ground, f.values); }

Json to_json(const ProbMeasure& mu) { return point_values_json(mu.ground(), mu.weights()); }

Json to_json(const PointMap& f) {
  Json images = Json::object();
  for (int x = 0; x < f.source().size(); ++x) images[f.source().label(x)] = f.target().label(f(x));
  return Json{{"target", f.target().labels()}, {"images", images}};
}

Json to_json(const SecondLevelCapacity& second) {
  Json gens = Json::array();
  for (const auto& g : second.generators()) {
    gens.push_back({{"set", labels_json(second.ground(), g.set)},
                    {"threshold", to_string(g.threshold)},
                    {"value", to_string(g.value)}});
  }
  return Json{{"labels", second.ground().labels()}, {"second_level_generators", gens}};
}

Json to_json(const Verdict& verdict, const GroundSet& ground) {
  if (const auto* b = std::get_if<Balanced>(&verdict)) {
    return Json{{"balanced", true}, {"witness", to_json(b->witness)}};
  }
  const auto& cert = std::get<Unbalanced>(verdict).certificate;
  Json items = Json::array();
  for (const auto& item : cert.items) {
    items.push_back({{"set", labels_json(ground, item.set)}, {"lambda", to_string(item.weight)}});
  }
  return Json{{"balanced", false},
              {"certificate", {{"items", items}, {"value", to_string(cert.value)}}}};
}

Json to_json(const ReproReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"checks", checks}};
}

Json to_json(const LinearProgram& lp) {
  Json rows = Json::array();
  for (const auto& row : lp.constraints) {
    rows.push_back({{"coeffs", rationals_json(row.coeffs)},
                    {"relation", relation_text(row.relation)},
                    {"rhs", to_string(row.rhs)}});
  }
  Json bounds = Json::array();
  for (int j = 0; j < lp.num_variables(); ++j) {
    bounds.push_back(lp.bound(j) == VarBound::kFree ? "free" : "nonnegative");
  }
  return Json{{"direction", lp.direction == Direction::kMaximize ? "max" : "min"},
              {"objective", rationals_json(lp.objective)},
              {"constraints", rows},
              {"bounds", bounds}};
}

Json to_json(const TableauSnapshot& snapshot) {
  Json rows = Json::array();
  for (const auto& r : snapshot.rows) rows.push_back(rationals_json(r));
  return Json{{"columns", snapshot.columns},
              {"basis", snapshot.basis},
              {"rows", rows},
              {"reduced_costs", rationals_json(snapshot.reduced_costs)},
              {"pivots", snapshot.pivots}};
}

}  // namespace balcap
