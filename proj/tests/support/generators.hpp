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

// Seeded random inputs shared by the unit and acceptance tests.

#ifndef BALCAP_TESTS_SUPPORT_GENERATORS_HPP
#define BALCAP_TESTS_SUPPORT_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "balcap/domain.hpp"
#include "balcap/functor.hpp"
#include "balcap/simplex.hpp"

namespace balcap::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// k/d with d in [1, max_den], 0 <= k <= d.
inline Rational unit_rational(Rng& rng, int max_den = 6) {
  const int d = uniform_int(rng, 1, max_den);
  return make_rational(uniform_int(rng, 0, d), d);
}

inline ProbMeasure random_measure(Rng& rng, const GroundSet& ground) {
  std::vector<Rational> w(ground.size());
  Rational total(0);
  for (auto& x : w) {
    x = uniform_int(rng, 0, 4);
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (auto& x : w) x /= total;
  return ProbMeasure(ground, std::move(w));
}

// Monotone closure of random values: nu(S) = max over T inside S of r(T).
inline Capacity random_capacity(Rng& rng, const GroundSet& ground) {
  std::vector<Rational> v(ground.subset_count());
  const std::uint32_t full = ground.full().mask();
  for (std::uint32_t m = 1; m < full; ++m) v[m] = unit_rational(rng);
  for (int p = 0; p < ground.size(); ++p) {
    for (std::uint32_t m = 0; m <= full; ++m) {
      if (((m >> p) & 1U) != 0 && v[m ^ (1U << p)] > v[m]) v[m] = v[m ^ (1U << p)];
    }
  }
  v[0] = 0;
  v[full] = 1;
  return Capacity::from_values(ground, std::move(v));
}

// Dominated by a random probability measure, hence balanced:
// nu(S) = max over T inside S of u_T * mu(T) with u_T in [0, 1].
inline Capacity random_balanced_capacity(Rng& rng, const GroundSet& ground) {
  const ProbMeasure mu = random_measure(rng, ground);
  std::vector<Rational> v(ground.subset_count());
  const std::uint32_t full = ground.full().mask();
  for (std::uint32_t m = 1; m < full; ++m) v[m] = unit_rational(rng) * measure_of(mu, Subset(m));
  for (int p = 0; p < ground.size(); ++p) {
    for (std::uint32_t m = 0; m <= full; ++m) {
      if (((m >> p) & 1U) != 0 && v[m ^ (1U << p)] > v[m]) v[m] = v[m ^ (1U << p)];
    }
  }
  v[0] = 0;
  v[full] = 1;
  return Capacity::from_values(ground, std::move(v));
}

// Alternates between the two generators above so corpora contain both
// balanced and unbalanced capacities.
inline Capacity mixed_capacity(Rng& rng, const GroundSet& ground, int index) {
  return index % 2 == 0 ? random_capacity(rng, ground) : random_balanced_capacity(rng, ground);
}

inline PointMap random_map(Rng& rng, const GroundSet& source, const GroundSet& target) {
  std::vector<int> images(source.size());
  for (auto& y : images) y = uniform_int(rng, 0, target.size() - 1);
  return PointMap(source, target, std::move(images));
}

inline FuncOnX random_function(Rng& rng, const GroundSet& ground, int scale) {
  FuncOnX f{ground, std::vector<Rational>(ground.size())};
  for (auto& v : f.values) v = unit_rational(rng, 8) * scale;
  return f;
}

// Random LP with small integer data. Some variables are free.
inline LinearProgram random_lp(Rng& rng, int max_vars) {
  LinearProgram lp;
  const int n = uniform_int(rng, 1, max_vars);
  const int m = uniform_int(rng, 1, max_vars + 2);
  lp.direction = uniform_int(rng, 0, 1) == 0 ? Direction::kMinimize : Direction::kMaximize;
  for (int j = 0; j < n; ++j) lp.objective.push_back(Rational(uniform_int(rng, -4, 4)));
  for (int j = 0; j < n; ++j) {
    lp.bounds.push_back(uniform_int(rng, 0, 4) == 0 ? VarBound::kFree : VarBound::kNonNegative);
  }
  for (int i = 0; i < m; ++i) {
    Constraint row;
    for (int j = 0; j < n; ++j) row.coeffs.push_back(Rational(uniform_int(rng, -3, 3)));
    row.relation = static_cast<Relation>(uniform_int(rng, 0, 2));
    row.rhs = uniform_int(rng, -5, 8);
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

}  // namespace balcap::testing

#endif  // BALCAP_TESTS_SUPPORT_GENERATORS_HPP
