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

#include <variant>

#include "balcap/balance.hpp"
#include "balcap/error.hpp"
#include "balcap/functor.hpp"
#include "balcap/integrals.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace balcap;

namespace {

const Rational kTwoThirds = make_rational(2, 3);

// Closed form written out directly.
Rational expected_mult(const SecondLevelCapacity& second, Subset f) {
  if (f == second.ground().full()) return Rational(1);
  Rational best(0);
  for (const auto& g : second.generators()) {
    if (g.set.is_subset_of(f)) best = std::max(best, std::min(g.threshold, g.value));
  }
  return best;
}

const ReproCheck& find_check(const ReproReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("Dirac capacities") {
  const GroundSet g = GroundSet::numbered(3);
  const Capacity d = dirac(g, 0);
  CHECK(d(Subset::singleton(0)) == 1);
  CHECK(d(Subset::of({1, 2})) == 0);
  for (std::uint32_t m = 0; m < 8; ++m) CHECK(d(Subset(m)) == ((m & 1U) != 0 ? 1 : 0));
  CHECK_THROWS_AS(dirac(g, 3), Error);
  CHECK_THROWS_AS(dirac(g, -1), Error);
  const FuncOnX f{g, {make_rational(3, 2), Rational(7), Rational(0)}};
  CHECK(choquet(d, f) == make_rational(3, 2));
  const Verdict v = check_balanced(d);
  REQUIRE(is_balanced(v));
  CHECK(std::get<Balanced>(v).witness == ProbMeasure::point_mass(g, 0));
}

TEST_CASE("pushforward examples") {
  const Capacity nu0 = realize(design_capacity(0));
  const GroundSet x = design_ground();
  CHECK(pushforward(PointMap::identity(x), nu0) == nu0);
  const GroundSet y({"p", "q", "r"});
  CHECK(pushforward(PointMap::constant(x, y, 1), nu0) == dirac(y, 1));

  const GroundSet ab({"a", "b"});
  const PointMap collapse(x, ab, {0, 0, 0, 1, 1, 1});
  const Capacity image = pushforward(collapse, nu0);
  CHECK(collapse.preimage(Subset::singleton(0)) == Subset::of({0, 1, 2}));
  CHECK(image(Subset::singleton(0)) == nu0(Subset::of({0, 1, 2})));
  CHECK(image(Subset::singleton(0)) == kTwoThirds);
  CHECK(image(Subset::singleton(1)) == 0);
  CHECK(image(ab.full()) == 1);

  CHECK_THROWS_AS(pushforward(collapse, dirac(y, 0)), Error);
  CHECK_THROWS_AS(PointMap(x, ab, {0, 0, 0, 1, 1, 2}), Error);
  CHECK_THROWS_AS(PointMap(x, ab, {0, 0}), Error);
}

TEST_CASE("functor laws and naturality of the unit") {
  testing::Rng rng(55);
  for (int i = 0; i < 100; ++i) {
    const GroundSet a = GroundSet::numbered(testing::uniform_int(rng, 1, 5));
    const GroundSet b = GroundSet::numbered(testing::uniform_int(rng, 1, 5));
    const GroundSet c = GroundSet::numbered(testing::uniform_int(rng, 1, 5));
    const PointMap f = testing::random_map(rng, a, b);
    const PointMap h = testing::random_map(rng, b, c);
    const Capacity nu = testing::mixed_capacity(rng, a, i);
    CHECK(pushforward(PointMap::identity(a), nu) == nu);
    CHECK(pushforward(compose(h, f), nu) == pushforward(h, pushforward(f, nu)));
    for (int x = 0; x < a.size(); ++x) CHECK(pushforward(f, dirac(a, x)) == dirac(b, f(x)));
  }
  const GroundSet a = GroundSet::numbered(2);
  CHECK_THROWS_AS(compose(PointMap::identity(a), PointMap::identity(GroundSet::numbered(3))), Error);
}

TEST_CASE("pushforward preserves balancedness and carries witnesses") {
  testing::Rng rng(56);
  int balanced = 0;
  for (int i = 0; i < 100; ++i) {
    const GroundSet a = GroundSet::numbered(testing::uniform_int(rng, 2, 5));
    const GroundSet b = GroundSet::numbered(testing::uniform_int(rng, 1, 5));
    const PointMap f = testing::random_map(rng, a, b);
    const Capacity nu = testing::mixed_capacity(rng, a, i);
    const Verdict v = check_balanced(nu);
    if (!is_balanced(v)) continue;
    ++balanced;
    const Capacity image = pushforward(f, nu);
    CHECK(is_balanced(check_balanced(image)));
    CHECK(in_core(pushforward(f, std::get<Balanced>(v).witness), image));
  }
  CHECK(balanced >= 40);
}

TEST_CASE("monad multiplication examples") {
  const Capacity mult = monad_mult(design_second_level());
  const Capacity nu0 = realize(design_capacity(0));
  CHECK(mult == nu0);
  for (std::uint32_t m = 0; m < 64; ++m) CHECK(mult(Subset(m)) == nu0(Subset(m)));

  const GroundSet g = GroundSet::numbered(4);
  CHECK(monad_mult(SecondLevelCapacity(g, {{Subset::singleton(2), Rational(1), Rational(1)}})) == dirac(g, 2));
  CHECK(monad_mult(SecondLevelCapacity(g, {})) == realize(GeneratedCapacity(g, {})));

  const SecondLevelCapacity uneven(g, {{Subset::of({0, 1}), make_rational(1, 3), make_rational(3, 4)},
                                       {Subset::of({1, 2}), make_rational(5, 6), make_rational(1, 2)}});
  const Capacity u = monad_mult(uneven);
  for (std::uint32_t m = 0; m < 16; ++m) CHECK(u(Subset(m)) == expected_mult(uneven, Subset(m)));

  CHECK_THROWS_AS(SecondLevelCapacity(g, {{Subset(), Rational(1), Rational(1)}}), Error);
  CHECK_THROWS_AS(SecondLevelCapacity(g, {{Subset(1), Rational(0), Rational(1)}}), Error);
  CHECK_THROWS_AS(SecondLevelCapacity(g, {{Subset(1), Rational(1), make_rational(3, 2)}}), Error);
}

TEST_CASE("oracle examples") {
  const GroundSet g1 = GroundSet::numbered(1);
  const GroundSet g2 = GroundSet::numbered(2);
  for (int x = 0; x < 2; ++x) {
    const SecondLevelCapacity one(g2, {{Subset::singleton(x), Rational(1), Rational(1)}});
    CHECK(monad_mult_oracle(one, 2) == dirac(g2, x));
  }
  for (std::uint32_t m = 1; m < 4; ++m) {
    const SecondLevelCapacity half(g2, {{Subset(m), make_rational(1, 2), make_rational(1, 2)}});
    CHECK(monad_mult_oracle(half, 2) == monad_mult(half));
  }
  // The six-point generators intersected with {1,2,3}.
  const GroundSet g3 = GroundSet::numbered(3);
  std::vector<SecondLevelGenerator> restricted;
  for (const Subset b : design_blocks()) {
    const Subset r = b & g3.full();
    if (!r.empty()) restricted.push_back({r, kTwoThirds, kTwoThirds});
  }
  const SecondLevelCapacity small(g3, restricted);
  CHECK(monad_mult_oracle(small, 3) == monad_mult(small));
  CHECK(monad_mult_oracle(SecondLevelCapacity(g1, {}), 1) == monad_mult(SecondLevelCapacity(g1, {})));

  CHECK_THROWS_AS(monad_mult_oracle(SecondLevelCapacity(GroundSet::numbered(4), {}), 2), Error);
  CHECK_THROWS_AS(monad_mult_oracle(small, 5), Error);
  CHECK_THROWS_AS(monad_mult_oracle(small, 0), Error);
}

TEST_CASE("oracle agrees with the closed form on random grid instances") {
  testing::Rng rng(88);
  for (int i = 0; i < 40; ++i) {
    const int n = testing::uniform_int(rng, 1, 3);
    const int k = testing::uniform_int(rng, 1, 3);
    const GroundSet g = GroundSet::numbered(n);
    std::vector<SecondLevelGenerator> gens;
    for (int j = testing::uniform_int(rng, 0, 2); j > 0; --j) {
      const auto mask = static_cast<std::uint32_t>(testing::uniform_int(rng, 1, (1 << n) - 1));
      gens.push_back({Subset(mask), make_rational(testing::uniform_int(rng, 1, k), k),
                      make_rational(testing::uniform_int(rng, 1, k), k)});
    }
    const SecondLevelCapacity second(g, gens);
    CHECK(monad_mult_oracle(second, k) == monad_mult(second));
  }
}

TEST_CASE("off-grid values are rounded down to the grid by the oracle") {
  testing::Rng rng(89);
  for (int i = 0; i < 40; ++i) {
    const int n = testing::uniform_int(rng, 1, 3);
    const int k = testing::uniform_int(rng, 1, 3);
    const GroundSet g = GroundSet::numbered(n);
    std::vector<SecondLevelGenerator> gens;
    for (int j = testing::uniform_int(rng, 1, 2); j > 0; --j) {
      const auto mask = static_cast<std::uint32_t>(testing::uniform_int(rng, 1, (1 << n) - 1));
      gens.push_back({Subset(mask), make_rational(testing::uniform_int(rng, 1, k), k),
                      make_rational(testing::uniform_int(rng, 1, 7), 7)});
    }
    const SecondLevelCapacity second(g, gens);
    const Capacity oracle = monad_mult_oracle(second, k);
    const Capacity exact = monad_mult(second);
    for (std::uint32_t m = 0; m + 1 < g.subset_count(); ++m) {
      Rational floor(0);
      for (int t = 0; t <= k; ++t) {
        if (make_rational(t, k) <= exact(Subset(m))) floor = make_rational(t, k);
      }
      CHECK(oracle(Subset(m)) == floor);
    }
  }
}

TEST_CASE("the six-point construction") {
  const ReproReport report = repro_counterexample();
  REQUIRE(report.checks.size() == 5);
  CHECK(report.all_pass());
  CHECK(report.checks[0].name == "block_coverage");
  CHECK(report.checks[1].name == "four_block_capacity_unbalanced");
  CHECK(report.checks[2].name == "three_block_capacities_balanced");
  CHECK(report.checks[3].name == "multiplication_yields_four_block_capacity");
  CHECK(report.checks[4].name == "second_level_bound");

  // Every point in exactly two blocks, every two blocks meet in one point.
  const auto blocks = design_blocks();
  for (int x = 0; x < 6; ++x) {
    int count = 0;
    for (const Subset b : blocks) count += b.contains(x) ? 1 : 0;
    CHECK(count == 2);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) CHECK((blocks[i] & blocks[j]).size() == 1);
  }
  CHECK(check_balanced(monad_mult(design_second_level())).index() == 1);
}

TEST_CASE("negative controls flip only their own check") {
  ReproOptions swapped;
  swapped.unbalanced_subject = design_capacity(1);
  const ReproReport a = repro_counterexample(swapped);
  CHECK_FALSE(find_check(a, "four_block_capacity_unbalanced").pass);
  int failing = 0;
  for (const auto& c : a.checks) failing += c.pass ? 0 : 1;
  CHECK(failing == 1);

  ReproOptions mistyped;
  auto blocks = design_blocks();
  blocks[3] = Subset::of({2, 3, 4});
  mistyped.coverage_blocks = blocks;
  const ReproReport b = repro_counterexample(mistyped);
  CHECK_FALSE(find_check(b, "block_coverage").pass);
  failing = 0;
  for (const auto& c : b.checks) failing += c.pass ? 0 : 1;
  CHECK(failing == 1);
}

TEST_CASE("a globally mistyped fourth block changes the unbalanced value") {
  // A4 = {3,4,5} everywhere: still unbalanced, but no longer at 4/3.
  auto blocks = design_blocks();
  blocks[3] = Subset::of({2, 3, 4});
  std::vector<Generator> gens;
  for (const Subset s : blocks) gens.push_back({s, kTwoThirds});
  const Capacity mutated = realize(GeneratedCapacity(design_ground(), gens));
  CHECK(balancedness_value(mutated) == make_rational(10, 9));
}
