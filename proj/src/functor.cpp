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

#include "balcap/functor.hpp"

#include <algorithm>
#include <sstream>

#include "balcap/balance.hpp"
#include "balcap/error.hpp"
#include "balcap/simplex.hpp"

namespace balcap {

PointMap::PointMap(GroundSet source, GroundSet target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(source_.size())) {
    throw Error(ErrorKind::kBadPoint, "map needs exactly one image per source point");
  }
  for (int y : images_) {
    if (y < 0 || y >= target_.size()) {
      throw Error(ErrorKind::kBadPoint, "image index " + std::to_string(y) + " outside target");
    }
  }
}

PointMap PointMap::identity(const GroundSet& ground) {
  std::vector<int> images(ground.size());
  for (int i = 0; i < ground.size(); ++i) images[i] = i;
  return PointMap(ground, ground, std::move(images));
}

PointMap PointMap::constant(const GroundSet& source, const GroundSet& target, int point) {
  return PointMap(source, target, std::vector<int>(source.size(), point));
}

Subset PointMap::preimage(Subset target_set) const {
  std::uint32_t mask = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (target_set.contains(images_[x])) mask |= std::uint32_t{1} << x;
  }
  return Subset(mask);
}

PointMap compose(const PointMap& outer, const PointMap& inner) {
  require_same_ground(inner.target(), outer.source());
  std::vector<int> images(inner.source().size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = outer(inner(static_cast<int>(x)));
  return PointMap(inner.source(), outer.target(), std::move(images));
}

Capacity dirac(const GroundSet& ground, int point, int max_points) {
  if (point < 0 || point >= ground.size()) {
    throw Error(ErrorKind::kBadPoint, "point index " + std::to_string(point) + " out of range");
  }
  check_dense_size(ground, max_points);
  std::vector<Rational> values(ground.subset_count());
  for (std::uint32_t m = 0; m < values.size(); ++m) {
    if (Subset(m).contains(point)) values[m] = 1;
  }
  return Capacity::from_values(ground, std::move(values), max_points);
}

Capacity pushforward(const PointMap& f, const Capacity& nu, int max_points) {
  require_same_ground(f.source(), nu.ground());
  check_dense_size(f.target(), max_points);
  const std::size_t count = f.target().subset_count();
  // Preimages built incrementally: pre(A) = pre(A - {y}) | pre({y}).
  std::vector<std::uint32_t> pre(count, 0);
  std::vector<Rational> values(count);
  for (std::uint32_t m = 1; m < count; ++m) {
    const int low = std::countr_zero(m);
    pre[m] = pre[m & (m - 1)] | f.preimage(Subset::singleton(low)).mask();
    values[m] = nu(Subset(pre[m]));
  }
  return Capacity::from_values(f.target(), std::move(values), max_points);
}

ProbMeasure pushforward(const PointMap& f, const ProbMeasure& mu) {
  require_same_ground(f.source(), mu.ground());
  std::vector<Rational> weights(f.target().size());
  for (int x = 0; x < f.source().size(); ++x) weights[f(x)] += mu.weight(x);
  return ProbMeasure(f.target(), std::move(weights));
}

SecondLevelCapacity::SecondLevelCapacity(GroundSet ground,
                                         std::vector<SecondLevelGenerator> generators)
    : ground_(std::move(ground)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.set.empty() || !g.set.is_subset_of(ground_.full())) {
      throw Error(ErrorKind::kBadGenerator, "second-level generator set is empty or exceeds ground");
    }
    if (g.threshold <= 0 || g.threshold > 1 || g.value <= 0 || g.value > 1) {
      throw Error(ErrorKind::kBadGenerator,
                  "second-level generator threshold/value outside (0,1]");
    }
  }
}

// Closed form. Write G_j = {c : c(A_j) >= s_j} and F^t = {c : c(F) >= t}.
// The second-level capacity is minimal, so C(S) = 1 when S is all of
// capacity space and otherwise C(S) = max({0} U {v_j : G_j subset of S}).
//
// Take F != X and t > 0. F^t is never everything: the Dirac capacity at a
// point outside F has c(F) = 0 < t. Moreover G_j is inside F^t iff A_j is
// inside F and t <= s_j:
//   - if x in A_j \ F, the Dirac capacity at x lies in G_j but not in F^t;
//   - if A_j is inside F but t > s_j, the minimal capacity with value s_j on
//     A_j lies in G_j and gives F the value s_j < t;
//   - if A_j is inside F and t <= s_j, monotonicity gives c(F) >= c(A_j) >= t.
// So C(F^t) = max({0} U {v_j : A_j inside F, s_j >= t}), and C(F^t) >= t
// holds for t > 0 iff some j has A_j inside F and t <= min(s_j, v_j). The
// sup over t is therefore max({0} U {min(s_j, v_j) : A_j inside F}).
// For F = X every c has c(X) = 1 >= t, so the value is 1.
Capacity monad_mult(const SecondLevelCapacity& second, int max_points) {
  std::vector<Generator> collapsed;
  for (const auto& g : second.generators()) {
    collapsed.push_back({g.set, std::min(g.threshold, g.value)});
  }
  return realize(GeneratedCapacity(second.ground(), std::move(collapsed)), max_points);
}

Capacity monad_mult_oracle(const SecondLevelCapacity& second, int grid_denominator) {
  const GroundSet& ground = second.ground();
  const int n = ground.size();
  const int k = grid_denominator;
  if (n > 3 || k < 1 || k > 4) {
    throw Error(ErrorKind::kTooLarge, "oracle needs at most 3 points and 1 <= k <= 4");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  const std::uint32_t full = count - 1;

  // All monotone normalized set functions with values in {0, ..., k} / k,
  // stored as integer numerators.
  std::vector<std::vector<int>> family;
  std::vector<int> current(count, 0);
  current[full] = k;
  const std::vector<std::uint32_t> free_masks = [&] {
    std::vector<std::uint32_t> v;
    for (std::uint32_t m = 1; m < full; ++m) v.push_back(m);
    return v;
  }();
  auto enumerate = [&](auto&& self, std::size_t idx) -> void {
    if (idx == free_masks.size()) {
      for (std::uint32_t m = 0; m < count; ++m) {
        for (int p = 0; p < n; ++p) {
          if (current[m] > current[m | (std::uint32_t{1} << p)]) return;
        }
      }
      family.push_back(current);
      return;
    }
    for (int v = 0; v <= k; ++v) {
      current[free_masks[idx]] = v;
      self(self, idx + 1);
    }
  };
  enumerate(enumerate, 0);

  const Rational k_rational(k);
  auto grid_value = [&](int numerator) { return Rational(numerator) / k_rational; };

  // Membership of each grid capacity in G_j.
  std::vector<std::vector<char>> upper_sets;
  for (const auto& g : second.generators()) {
    std::vector<char> member(family.size());
    for (std::size_t c = 0; c < family.size(); ++c) {
      member[c] = grid_value(family[c][g.set.mask()]) >= g.threshold;
    }
    upper_sets.push_back(std::move(member));
  }

  auto second_level_value = [&](const std::vector<char>& set) -> Rational {
    if (std::all_of(set.begin(), set.end(), [](char b) { return b != 0; })) return Rational(1);
    Rational best(0);
    for (std::size_t j = 0; j < upper_sets.size(); ++j) {
      bool contained = true;
      for (std::size_t c = 0; c < family.size() && contained; ++c) {
        if (upper_sets[j][c] && !set[c]) contained = false;
      }
      if (contained && second.generators()[j].value > best) best = second.generators()[j].value;
    }
    return best;
  };

  std::vector<Rational> values(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    Rational sup(0);
    for (int level = 0; level <= k; ++level) {
      const Rational t = grid_value(level);
      std::vector<char> level_set(family.size());
      for (std::size_t c = 0; c < family.size(); ++c) {
        level_set[c] = grid_value(family[c][m]) >= t;
      }
      if (second_level_value(level_set) >= t && t > sup) sup = t;
    }
    values[m] = sup;
  }
  return Capacity::from_values(ground, std::move(values));
}

GroundSet design_ground() { return GroundSet::numbered(6); }

std::array<Subset, 4> design_blocks() {
  // Zero-based point indices for labels 1..6.
  return {Subset::of({0, 1, 2}), Subset::of({0, 3, 4}), Subset::of({1, 4, 5}),
          Subset::of({2, 3, 5})};
}

GeneratedCapacity design_capacity(int skip) {
  if (skip < 0 || skip > 4) throw Error(ErrorKind::kBadGenerator, "block index must be 0..4");
  std::vector<Generator> generators;
  const auto blocks = design_blocks();
  for (int j = 0; j < 4; ++j) {
    if (j + 1 != skip) generators.push_back({blocks[j], make_rational(2, 3)});
  }
  return GeneratedCapacity(design_ground(), std::move(generators));
}

SecondLevelCapacity design_second_level() {
  std::vector<SecondLevelGenerator> generators;
  for (const auto& block : design_blocks()) {
    generators.push_back({block, make_rational(2, 3), make_rational(2, 3)});
  }
  return SecondLevelCapacity(design_ground(), std::move(generators));
}

bool ReproReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

namespace {

std::string set_text(const GroundSet& ground, Subset s) { return "{" + ground.key(s) + "}"; }

ReproCheck check_coverage(const std::array<Subset, 4>& blocks) {
  const GroundSet ground = design_ground();
  std::ostringstream detail;
  bool pass = true;
  detail << "half-weighted block coverage per point:";
  for (int p = 0; p < ground.size(); ++p) {
    Rational coverage(0);
    for (const auto& b : blocks) {
      if (b.contains(p)) coverage += make_rational(1, 2);
    }
    if (coverage != 1) pass = false;
    detail << ' ' << ground.label(p) << '=' << to_string(coverage);
  }
  return {"block_coverage", pass, detail.str()};
}

ReproCheck check_unbalanced(const GeneratedCapacity& subject) {
  const Capacity nu = realize(subject);
  const Verdict verdict = check_balanced(nu);
  const auto* unbalanced = std::get_if<Unbalanced>(&verdict);
  if (unbalanced == nullptr) {
    return {"four_block_capacity_unbalanced", false, "capacity is balanced; a core element exists"};
  }
  const auto& cert = unbalanced->certificate;
  std::ostringstream detail;
  detail << "value " << to_string(cert.value) << " via";
  for (const auto& item : cert.items) {
    detail << ' ' << to_string(item.weight) << '*' << set_text(nu.ground(), item.set);
  }
  return {"four_block_capacity_unbalanced", cert.value == make_rational(4, 3), detail.str()};
}

ReproCheck check_three_block_capacities() {
  std::ostringstream detail;
  bool pass = true;
  for (int skip = 1; skip <= 4; ++skip) {
    const Capacity nu = realize(design_capacity(skip));
    const Verdict verdict = check_balanced(nu);
    const auto* balanced = std::get_if<Balanced>(&verdict);
    const bool ok = balanced != nullptr && in_core(balanced->witness, nu);
    pass = pass && ok;
    detail << (skip > 1 ? "; " : "") << "without block " << skip << ": ";
    if (!ok) {
      detail << "no core element";
      continue;
    }
    detail << "core element";
    for (const auto& w : balanced->witness.weights()) detail << ' ' << to_string(w);
  }
  return {"three_block_capacities_balanced", pass, detail.str()};
}

ReproCheck check_multiplication() {
  const Capacity collapsed = monad_mult(design_second_level());
  const Capacity expected = realize(design_capacity(0));
  int mismatches = 0;
  for (std::uint32_t m = 0; m < expected.values().size(); ++m) {
    if (collapsed(Subset(m)) != expected(Subset(m))) ++mismatches;
  }
  const Verdict verdict = check_balanced(collapsed);
  std::ostringstream detail;
  detail << mismatches << " of " << expected.values().size()
         << " subsets differ from the four-block capacity; the product is "
         << (is_balanced(verdict) ? "balanced" : "unbalanced");
  return {"multiplication_yields_four_block_capacity", mismatches == 0, detail.str()};
}

// Closing inequality of the second-level balancedness argument. Weights eta_j
// on the sets {c : c(A_j) >= 2/3} must satisfy sum_{j != l} eta_j <= b for
// each l, because the three-block capacity without block l lies in the other
// three sets. Then the weighted value is a + (2/3) sum_j eta_j with a + b = 1.
ReproCheck check_second_level_bound() {
  // max sum eta_j  s.t.  sum_{j != l} eta_j <= 1 for each l.
  LinearProgram eta_lp;
  eta_lp.objective.assign(4, Rational(1));
  for (int l = 0; l < 4; ++l) {
    Constraint row{std::vector<Rational>(4, Rational(1)), Relation::kLessEqual, Rational(1)};
    row.coeffs[l] = 0;
    eta_lp.constraints.push_back(std::move(row));
  }
  // Variables (a, b, eta_1..eta_4):
  // max a + (2/3) sum eta_j  s.t.  a + b = 1,  sum_{j != l} eta_j - b <= 0.
  LinearProgram full_lp;
  full_lp.objective = {Rational(1), Rational(0)};
  for (int j = 0; j < 4; ++j) full_lp.objective.push_back(make_rational(2, 3));
  full_lp.constraints.push_back(
      {{Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)},
       Relation::kEqual,
       Rational(1)});
  for (int l = 0; l < 4; ++l) {
    Constraint row{std::vector<Rational>(6, Rational(1)), Relation::kLessEqual, Rational(0)};
    row.coeffs[0] = 0;
    row.coeffs[1] = -1;
    row.coeffs[2 + l] = 0;
    full_lp.constraints.push_back(std::move(row));
  }
  const LPOutcome eta = solve(eta_lp);
  const LPOutcome full = solve(full_lp);
  const auto* eta_opt = std::get_if<Optimal>(&eta);
  const auto* full_opt = std::get_if<Optimal>(&full);
  if (eta_opt == nullptr || full_opt == nullptr) {
    return {"second_level_bound", false, "bounding program not optimal"};
  }
  const bool pass = eta_opt->value == make_rational(4, 3) && full_opt->value <= 1 &&
                    check_outcome(eta_lp, eta) && check_outcome(full_lp, full);
  std::ostringstream detail;
  detail << "sum eta <= " << to_string(eta_opt->value) << " * b, so a + 2/3 * "
         << to_string(eta_opt->value) << " * b <= " << to_string(full_opt->value)
         << " when a + b = 1; only this closing inequality is checked, not balancedness of the "
            "second-level capacity on the full capacity space";
  return {"second_level_bound", pass, detail.str()};
}

}  // namespace

ReproReport repro_counterexample(const ReproOptions& options) {
  ReproReport report;
  report.checks.push_back(check_coverage(options.coverage_blocks.value_or(design_blocks())));
  report.checks.push_back(check_unbalanced(options.unbalanced_subject.value_or(design_capacity(0))));
  report.checks.push_back(check_three_block_capacities());
  report.checks.push_back(check_multiplication());
  report.checks.push_back(check_second_level_bound());
  return report;
}

}  // namespace balcap
