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

// JSON document formats. Rationals are always quoted "p/q" (or "p") strings.
//
//   game (dense)       {"labels":[...], "capacity":{"<comma-joined labels>":"p/q", ...}}
//   game (generated)   {"labels":[...], "generators":[{"set":[...], "value":"p/q"}]}
//   function/measure   {"values":{"<label>":"p/q", ...}}
//   point map          {"target":[...], "images":{"<source label>":"<target label>", ...}}
//   second level       {"labels":[...], "second_level_generators":
//                         [{"set":[...], "threshold":"p/q", "value":"p/q"}]}
//
// The empty subset's key is "". Objects are emitted with sorted keys, and
// subset keys and label arrays list points in ground order, so serializing a
// parsed canonical file reproduces it byte for byte.
//
// Schema problems throw Error(kParse) with a JSON path in the message;
// semantic problems (capacity axioms, probability normalization) surface as
// the domain module's error kinds.

#ifndef BALCAP_IO_HPP
#define BALCAP_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "balcap/balance.hpp"
#include "balcap/domain.hpp"
#include "balcap/functor.hpp"
#include "balcap/simplex.hpp"
#include "json.hpp"

namespace balcap {

using Json = nlohmann::json;

using Game = std::variant<Capacity, GeneratedCapacity>;

Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);
// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& doc);

Game game_from_json(const Json& doc, int max_points = kDefaultMaxPoints);
const GroundSet& ground_of(const Game& game);
// The dense capacity, realizing generators when needed.
Capacity dense(const Game& game, int max_points = kDefaultMaxPoints);

FuncOnX function_from_json(const Json& doc, const GroundSet& ground);
ProbMeasure measure_from_json(const Json& doc, const GroundSet& ground);
PointMap map_from_json(const Json& doc, const GroundSet& source);
SecondLevelCapacity second_level_from_json(const Json& doc);

Json to_json(const Capacity& nu);
Json to_json(const GeneratedCapacity& generated);
Json to_json(const Game& game);
Json to_json(const FuncOnX& f);
Json to_json(const ProbMeasure& mu);
Json to_json(const PointMap& f);
Json to_json(const SecondLevelCapacity& second);
Json to_json(const Verdict& verdict, const GroundSet& ground);
Json to_json(const ReproReport& report);
Json to_json(const LinearProgram& lp);
Json to_json(const TableauSnapshot& snapshot);

// Labels of the points of s, in ground order.
Json labels_json(const GroundSet& ground, Subset s);

}  // namespace balcap

#endif  // BALCAP_IO_HPP
