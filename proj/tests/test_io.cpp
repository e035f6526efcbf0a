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

#include <fstream>
#include <sstream>
#include <variant>

#include "balcap/error.hpp"
#include "balcap/functor.hpp"
#include "balcap/io.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace balcap;

namespace {

std::string data_path(const std::string& name) { return std::string(BALCAP_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error(const std::string& text, auto&& parse) {
  try {
    parse(parse_json_text(text));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    return e.what();
  }
  FAIL("no parse error for " << text);
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the four-block generator file") {
  const Game game = game_from_json(read_json_file(data_path("nu0.json")));
  REQUIRE(std::holds_alternative<GeneratedCapacity>(game));
  const auto& gen = std::get<GeneratedCapacity>(game);
  CHECK(gen.generators().size() == 4);
  CHECK(gen == design_capacity(0));
  CHECK(dense(game) == realize(design_capacity(0)));
  const Game dense_game = game_from_json(read_json_file(data_path("nu0_dense.json")));
  REQUIRE(std::holds_alternative<Capacity>(dense_game));
  CHECK(std::get<Capacity>(dense_game) == realize(design_capacity(0)));
  for (int l = 1; l <= 4; ++l) {
    const Game g = game_from_json(read_json_file(data_path("nu" + std::to_string(l) + ".json")));
    CHECK(std::get<GeneratedCapacity>(g) == design_capacity(l));
  }
  CHECK(second_level_from_json(read_json_file(data_path("A.json"))) == design_second_level());
}

TEST_CASE("shipped files round-trip byte for byte") {
  const GroundSet x = design_ground();
  for (const char* name : {"nu0.json", "nu1.json", "nu2.json", "nu3.json", "nu4.json", "nu0_dense.json"}) {
    CAPTURE(name);
    const std::string text = slurp(data_path(name));
    CHECK(canonical_dump(to_json(game_from_json(parse_json_text(text)))) == text);
  }
  for (const char* name : {"chi_A1.json", "chi_A2.json", "chi_A3.json", "chi_A4.json"}) {
    CAPTURE(name);
    const std::string text = slurp(data_path(name));
    CHECK(canonical_dump(to_json(function_from_json(parse_json_text(text), x))) == text);
  }
  const std::string measure = slurp(data_path("uniform_456.json"));
  CHECK(canonical_dump(to_json(measure_from_json(parse_json_text(measure), x))) == measure);
  const std::string map = slurp(data_path("collapse.json"));
  CHECK(canonical_dump(to_json(map_from_json(parse_json_text(map), x))) == map);
  const std::string second = slurp(data_path("A.json"));
  CHECK(canonical_dump(to_json(second_level_from_json(parse_json_text(second)))) == second);
}

TEST_CASE("random capacities round-trip") {
  testing::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const GroundSet g = GroundSet::numbered(testing::uniform_int(rng, 1, 5));
    const Capacity nu = testing::mixed_capacity(rng, g, i);
    const std::string once = canonical_dump(to_json(nu));
    const Game back = game_from_json(parse_json_text(once));
    CHECK(std::get<Capacity>(back) == nu);
    CHECK(canonical_dump(to_json(back)) == once);
  }
}

TEST_CASE("schema errors name the offending path") {
  const GroundSet x = design_ground();
  auto measure = [&](const Json& j) { measure_from_json(j, x); };
  auto function = [&](const Json& j) { function_from_json(j, x); };
  auto game = [](const Json& j) { game_from_json(j); };

  const std::string zero_den =
      parse_error(R"({"values":{"1":"2/0","2":"0","3":"0","4":"0","5":"0","6":"0"}})", measure);
  CHECK(contains(zero_den, "$.values[\"1\"]"));

  const std::string missing = parse_error(R"({"values":{"1":"1","2":"1","3":"1","4":"0","5":"0"}})", function);
  CHECK(contains(missing, "missing value for label '6'"));

  CHECK(contains(parse_error(R"({"values":{"7":"1"}})", function), "unknown label '7'"));
  CHECK(contains(parse_error(R"({"values":{"1":1}})", function), "$.values[\"1\"]"));
  CHECK(contains(parse_error(R"({"labels":["a"],"capacity":{"a":"1","":"0","b":"0"}})", game),
                 "$.capacity[\"b\"]"));
  CHECK(contains(parse_error(R"({"labels":["a","b"],"generators":[{"set":["c"],"value":"1"}]})", game),
                 "$.generators[0].set[0]"));
  CHECK(contains(parse_error(R"({"labels":["a"]})", game), "$"));
  CHECK(contains(parse_error(R"({"labels":["a"],"capacity":{},"generators":[]})", game), "exactly one"));
  CHECK(contains(parse_error(R"({"labels":["a","a"],"capacity":{}})", game), "$.labels"));
  CHECK(contains(parse_error(R"({"labels":["a"],"generators":[{"set":["a"],"value":"1","x":1}]})", game),
                 "unexpected field 'x'"));
  CHECK_THROWS_AS(parse_json_text("{not json"), Error);
}

TEST_CASE("semantic problems keep their domain error kinds") {
  auto kind = [](const std::string& text) {
    try {
      game_from_json(parse_json_text(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind(R"({"labels":["a"],"capacity":{"":"1/10","a":"1"}})") == ErrorKind::kEmptyNotZero);
  CHECK(kind(R"({"labels":["a"],"capacity":{"":"0"}})") == ErrorKind::kMissingEntry);
  CHECK(kind(R"({"labels":["a","b"],"capacity":{"":"0","a":"1/2","b":"0","a,b":"1/4"}})") ==
        ErrorKind::kFullNotOne);
  CHECK(kind(R"({"labels":["a"],"generators":[{"set":["a"],"value":"3/2"}]})") == ErrorKind::kBadGenerator);
  std::string big = R"({"labels":[)";
  for (int i = 0; i < 17; ++i) big += (i ? ",\"" : "\"") + std::to_string(i) + "\"";
  big += R"(],"generators":[]})";
  const Game g = game_from_json(parse_json_text(big));
  CHECK_THROWS_AS(dense(g), Error);
  CHECK(dense(g, 17)(ground_of(g).full()) == 1);
}

TEST_CASE("verdict and report serialization") {
  const Json v = to_json(Verdict{Unbalanced{{{{design_blocks()[0], make_rational(1, 2)}}, make_rational(4, 3)}}},
                         design_ground());
  CHECK(v["balanced"] == false);
  CHECK(v["certificate"]["value"] == "4/3");
  CHECK(v["certificate"]["items"][0]["lambda"] == "1/2");
  CHECK(v["certificate"]["items"][0]["set"] == Json::array({"1", "2", "3"}));
  const Json r = to_json(repro_counterexample());
  CHECK(r["checks"].size() == 5);
  CHECK(r["checks"][0]["pass"] == true);
}
