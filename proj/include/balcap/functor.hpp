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

// The capacity functor and monad on finite ground sets: Dirac unit,
// pushforward along point maps, and multiplication for second-level
// capacities given by generators. Also replays the six-point construction
// showing that balanced capacities are closed under pushforward but not
// under monad multiplication.

#ifndef BALCAP_FUNCTOR_HPP
#define BALCAP_FUNCTOR_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "balcap/domain.hpp"

namespace balcap {

// A total map between ground sets (every map is continuous on a finite
// discrete space).
class PointMap {
 public:
  // Throws Error(kBadPoint) if an image is outside the target or the image
  // count differs from the source size.
  PointMap(GroundSet source, GroundSet target, std::vector<int> images);

  static PointMap identity(const GroundSet& ground);
  static PointMap constant(const GroundSet& source, const GroundSet& target, int point);

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int point) const { return images_.at(point); }

  Subset preimage(Subset target_set) const;

  bool operator==(const PointMap&) const = default;

 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<int> images_;
};

// outer o inner. Throws kGroundMismatch unless inner.target() == outer.source().
PointMap compose(const PointMap& outer, const PointMap& inner);

// Unit: 1 on sets containing `point`, 0 elsewhere. Throws kBadPoint.
Capacity dirac(const GroundSet& ground, int point, int max_points = kDefaultMaxPoints);

// A -> nu(f^{-1}(A)). Throws kGroundMismatch unless nu lives on f.source().
Capacity pushforward(const PointMap& f, const Capacity& nu, int max_points = kDefaultMaxPoints);
ProbMeasure pushforward(const PointMap& f, const ProbMeasure& mu);

struct SecondLevelGenerator {
  Subset set;
  Rational threshold;
  Rational value;

  bool operator==(const SecondLevelGenerator&) const = default;
};

// The smallest capacity C on capacity space with C(G_j) >= v_j, where
// G_j = {c : c(A_j) >= s_j} for generator (A_j, s_j, v_j).
class SecondLevelCapacity {
 public:
  // Sets nonempty and inside the ground, thresholds and values in (0, 1].
  // Throws Error(kBadGenerator).
  SecondLevelCapacity(GroundSet ground, std::vector<SecondLevelGenerator> generators);

  const GroundSet& ground() const { return ground_; }
  const std::vector<SecondLevelGenerator>& generators() const { return generators_; }

  bool operator==(const SecondLevelCapacity&) const = default;

 private:
  GroundSet ground_;
  std::vector<SecondLevelGenerator> generators_;
};

// Monad multiplication F -> sup{t in [0,1] : C({c : c(F) >= t}) >= t},
// evaluated in closed form (see the derivation in functor.cpp).
Capacity monad_mult(const SecondLevelCapacity& second, int max_points = kDefaultMaxPoints);

// Brute-force evaluation of the sup formula with capacity space replaced by
// the finite family of all capacities valued in {0, 1/k, ..., 1}, the
// second-level capacity realized as the minimal one on that family, and t
// ranging over the same grid. Requires ground size <= 3 and 1 <= k <= 4;
// throws Error(kTooLarge) otherwise.
Capacity monad_mult_oracle(const SecondLevelCapacity& second, int grid_denominator);

// The six-point construction: X = {1..6} with blocks
// A1 = {1,2,3}, A2 = {1,4,5}, A3 = {2,5,6}, A4 = {3,4,6}; every point lies in
// exactly two blocks and every two blocks meet in exactly one point.
GroundSet design_ground();
std::array<Subset, 4> design_blocks();
// Minimal capacity with value 2/3 on every block except block `skip`
// (1-based); skip = 0 keeps all four blocks (the unbalanced capacity).
GeneratedCapacity design_capacity(int skip = 0);
// Second-level capacity with generators (A_j, 2/3, 2/3) for the four blocks.
SecondLevelCapacity design_second_level();

struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproReport {
  std::vector<ReproCheck> checks;

  bool all_pass() const;
};

// Per-check overrides used as negative controls.
struct ReproOptions {
  // Blocks used by the coverage check only.
  std::optional<std::array<Subset, 4>> coverage_blocks;
  // Capacity expected to be unbalanced with value 4/3 (default: all blocks).
  std::optional<GeneratedCapacity> unbalanced_subject;
};

// Runs the five checks in a fixed order: block coverage, unbalancedness of
// the four-block capacity, balancedness of the four three-block capacities,
// multiplication of the second-level capacity back to the four-block
// capacity, and the closing inequality of the second-level balancedness
// argument.
ReproReport repro_counterexample(const ReproOptions& options = {});

}  // namespace balcap

#endif  // BALCAP_FUNCTOR_HPP
