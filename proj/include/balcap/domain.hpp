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

// Core value types: finite ground sets, subsets as bitmasks, capacities
// (monotone normalized set functions), probability measures and functions
// on the ground set.
//
// On a finite discrete space every subset is closed and every function is
// continuous, so the upper-semicontinuity axiom of a capacity holds
// vacuously and is not checked anywhere.

#ifndef BALCAP_DOMAIN_HPP
#define BALCAP_DOMAIN_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balcap/rational.hpp"

namespace balcap {

// Default cap on the number of points for dense (2^n) tables.
inline constexpr int kDefaultMaxPoints = 16;
// Absolute cap; subsets are 32-bit masks and tables must stay addressable.
inline constexpr int kHardMaxPoints = 24;

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}

  static Subset of(std::initializer_list<int> points);
  static constexpr Subset singleton(int point) { return Subset(std::uint32_t{1} << point); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int point) const { return ((mask_ >> point) & 1U) != 0; }
  constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }

  std::vector<int> points() const;

  constexpr auto operator<=>(const Subset&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

class GroundSet {
 public:
  // Labels must be nonempty, unique and free of ','. Throws Error(kBadGround).
  explicit GroundSet(std::vector<std::string> labels);

  // Points labelled "1".."n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int point) const { return labels_.at(point); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  Subset full() const { return Subset::full(size()); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }

  // Comma-joined labels in point order; "" for the empty set.
  std::string key(Subset s) const;
  // Inverse of key(); labels may appear in any order. Throws Error(kParse).
  Subset parse_key(std::string_view key) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// Throws Error(kGroundTooLarge) unless 1 <= ground.size() <= max_points
// (max_points itself is clamped to kHardMaxPoints).
void check_dense_size(const GroundSet& ground, int max_points);

// Throws Error(kGroundMismatch) when the two grounds differ.
void require_same_ground(const GroundSet& a, const GroundSet& b);

// A monotone set function with value 0 on the empty set and 1 on the whole
// ground, stored densely by subset mask. Immutable once built.
class Capacity {
 public:
  // Validates a dense table indexed by mask. Checks run in a fixed order
  // (size, empty, full, range, monotonicity) and the first failure throws
  // Error with kind kEmptyNotZero, kFullNotOne, kOutOfRange or kNotMonotone;
  // the message names the witnessing subsets.
  static Capacity from_values(GroundSet ground, std::vector<Rational> values,
                              int max_points = kDefaultMaxPoints);

  const GroundSet& ground() const { return ground_; }
  const Rational& operator()(Subset s) const { return values_[s.mask()]; }
  std::span<const Rational> values() const { return values_; }

  bool operator==(const Capacity&) const = default;

 private:
  Capacity(GroundSet ground, std::vector<Rational> values)
      : ground_(std::move(ground)), values_(std::move(values)) {}

  GroundSet ground_;
  std::vector<Rational> values_;
};

// Sparse input form; every subset must be present (kMissingEntry otherwise).
Capacity validate_capacity(const std::map<Subset, Rational>& table, const GroundSet& ground,
                           int max_points = kDefaultMaxPoints);

struct Generator {
  Subset set;
  Rational value;

  bool operator==(const Generator&) const = default;
};

// Presents the smallest capacity with value >= v_j on each generator set A_j:
//   nu(F) = max({0} U {v_j : A_j subset of F})  for F != X,  nu(X) = 1.
class GeneratedCapacity {
 public:
  // Generator sets must be nonempty subsets of the ground, values in (0, 1].
  // Throws Error(kBadGenerator).
  GeneratedCapacity(GroundSet ground, std::vector<Generator> generators);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Generator>& generators() const { return generators_; }

  // Direct evaluation without materializing the table.
  Rational operator()(Subset s) const;

  bool operator==(const GeneratedCapacity&) const = default;

 private:
  GroundSet ground_;
  std::vector<Generator> generators_;
};

Capacity realize(const GeneratedCapacity& generated, int max_points = kDefaultMaxPoints);

// Nonnegative point weights summing to exactly 1.
class ProbMeasure {
 public:
  // Throws Error(kNotProbability) or Error(kDimensionMismatch).
  ProbMeasure(GroundSet ground, std::vector<Rational> weights);

  static ProbMeasure point_mass(GroundSet ground, int point);
  static ProbMeasure uniform(GroundSet ground);
  // Uniform on the points of `support` (nonempty).
  static ProbMeasure uniform_on(GroundSet ground, Subset support);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int point) const { return weights_.at(point); }

  bool operator==(const ProbMeasure&) const = default;

 private:
  GroundSet ground_;
  std::vector<Rational> weights_;
};

Rational measure_of(const ProbMeasure& mu, Subset s);

// The measure viewed as an additive capacity.
Capacity as_capacity(const ProbMeasure& mu, int max_points = kDefaultMaxPoints);

// t * a + (1 - t) * b for t in [0, 1]; the result is again a capacity.
Capacity mix(const Capacity& a, const Capacity& b, const Rational& t);

// A real-valued function on the ground set. Range restrictions belong to the
// consumer (Choquet needs f >= 0, t-normed integrals need f in [0, 1]).
struct FuncOnX {
  GroundSet ground;
  std::vector<Rational> values;

  static FuncOnX constant(GroundSet ground, const Rational& c);
  // height on s, 0 elsewhere.
  static FuncOnX indicator(GroundSet ground, Subset s, const Rational& height = Rational(1));

  const Rational& operator()(int point) const { return values.at(point); }
  // Level set {x : f(x) >= t}.
  Subset level_set(const Rational& t) const;

  bool operator==(const FuncOnX&) const = default;
};

// (f(x1) - f(x2)) * (g(x1) - g(x2)) >= 0 for all point pairs.
bool comonotone(const FuncOnX& f, const FuncOnX& g);

}  // namespace balcap

#endif  // BALCAP_DOMAIN_HPP
