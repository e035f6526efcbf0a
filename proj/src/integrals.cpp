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

#include "balcap/integrals.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "balcap/balance.hpp"
#include "balcap/error.hpp"

namespace balcap {

namespace {

void require_unit_interval(const Rational& v, const char* what) {
  if (v < 0 || v > 1) {
    throw Error(ErrorKind::kOutOfRange,
                std::string(what) + " value " + to_string(v) + " outside [0,1]");
  }
}

std::set<Rational> distinct_values(const FuncOnX& f) {
  return std::set<Rational>(f.values.begin(), f.values.end());
}

void require_matching(const Capacity& nu, const FuncOnX& f) {
  require_same_ground(nu.ground(), f.ground);
  if (f.values.size() != static_cast<std::size_t>(f.ground.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "function needs one value per point");
  }
}

// Random rational k/d with d in [1, 12] and 0 <= k <= d * scale.
Rational random_rational(std::mt19937_64& rng, int scale) {
  const int d = std::uniform_int_distribution<int>(1, 12)(rng);
  const int k = std::uniform_int_distribution<int>(0, d * scale)(rng);
  return make_rational(k, d);
}

// Two functions nondecreasing along one shared random point order, hence
// comonotone.
std::pair<FuncOnX, FuncOnX> comonotone_pair(const GroundSet& ground, std::mt19937_64& rng,
                                            int scale) {
  const int n = ground.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  auto make = [&] {
    std::vector<Rational> sorted(n);
    for (auto& v : sorted) v = random_rational(rng, scale);
    std::sort(sorted.begin(), sorted.end());
    FuncOnX f{ground, std::vector<Rational>(n)};
    for (int i = 0; i < n; ++i) f.values[order[i]] = sorted[i];
    return f;
  };
  FuncOnX f = make();
  FuncOnX g = make();
  return {std::move(f), std::move(g)};
}

}  // namespace

std::string_view to_string(TNorm tnorm) {
  switch (tnorm) {
    case TNorm::kMin: return "min";
    case TNorm::kProduct: return "product";
    case TNorm::kLukasiewicz: return "lukasiewicz";
  }
  return "unknown";
}

std::optional<TNorm> parse_tnorm(std::string_view name) {
  for (TNorm t : {TNorm::kMin, TNorm::kProduct, TNorm::kLukasiewicz}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

Rational apply_tnorm(TNorm tnorm, const Rational& a, const Rational& b) {
  require_unit_interval(a, "t-norm argument");
  require_unit_interval(b, "t-norm argument");
  switch (tnorm) {
    case TNorm::kMin: return std::min(a, b);
    case TNorm::kProduct: return a * b;
    case TNorm::kLukasiewicz: return std::max(Rational(0), Rational(a + b - 1));
  }
  return Rational(0);
}

Rational choquet(const Capacity& nu, const FuncOnX& f) {
  require_matching(nu, f);
  for (const auto& v : f.values) {
    if (v < 0) throw Error(ErrorKind::kNegativeFunction, "Choquet integrand takes value " + to_string(v));
  }
  Rational total(0);
  Rational previous(0);
  for (const auto& level : distinct_values(f)) {
    if (level == 0) continue;
    total += (level - previous) * nu(f.level_set(level));
    previous = level;
  }
  return total;
}

Rational tnorm_integral(const Capacity& nu, const FuncOnX& f, TNorm tnorm) {
  require_matching(nu, f);
  for (const auto& v : f.values) require_unit_interval(v, "t-normed integrand");
  // With v_0 = 0 < v_1 < ... < v_k the distinct values, the level set f_t is
  // constant on each interval (v_{j-1}, v_j], so t -> nu(f_t) * t is
  // nondecreasing there (monotone t-norm) and its sup is attained at v_j.
  // Beyond v_k the level set is empty and the term is 0 * t = 0; at t = 0 the
  // term is nu(X) * 0 = 0. Hence the max over the finite candidates is exact.
  Rational best = apply_tnorm(tnorm, nu(nu.ground().full()), Rational(0));
  for (const auto& level : distinct_values(f)) {
    Rational term = apply_tnorm(tnorm, nu(f.level_set(level)), level);
    if (term > best) best = std::move(term);
  }
  return best;
}

bool is_comonotone_additive_sample(const Capacity& nu, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    auto [f, g] = comonotone_pair(nu.ground(), rng, 3);
    FuncOnX sum = f;
    for (std::size_t p = 0; p < sum.values.size(); ++p) sum.values[p] += g.values[p];
    if (choquet(nu, sum) != choquet(nu, f) + choquet(nu, g)) return false;

    const Rational c = random_rational(rng, 4);
    FuncOnX scaled = f;
    for (auto& v : scaled.values) v *= c;
    if (choquet(nu, scaled) != c * choquet(nu, f)) return false;
  }
  return true;
}

bool is_comonotone_maxitive_sample(const Capacity& nu, TNorm tnorm, int trials,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    auto [f, g] = comonotone_pair(nu.ground(), rng, 1);
    FuncOnX join = f;
    for (std::size_t p = 0; p < join.values.size(); ++p) {
      join.values[p] = std::max(f.values[p], g.values[p]);
    }
    const Rational lhs = tnorm_integral(nu, join, tnorm);
    if (lhs != std::max(tnorm_integral(nu, f, tnorm), tnorm_integral(nu, g, tnorm))) return false;

    const Rational c = random_rational(rng, 1);
    FuncOnX scaled = f;
    for (auto& v : scaled.values) v = apply_tnorm(tnorm, c, v);
    if (tnorm_integral(nu, scaled, tnorm) != apply_tnorm(tnorm, c, tnorm_integral(nu, f, tnorm))) {
      return false;
    }
  }
  return true;
}

bool balanced_functional(const Capacity& nu, IntegralKind /*kind*/) {
  return is_balanced(check_balanced(nu));
}

}  // namespace balcap
