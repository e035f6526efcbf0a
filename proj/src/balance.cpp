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

#include "balcap/balance.hpp"

#include <algorithm>
#include <stdexcept>

#include "balcap/error.hpp"

namespace balcap {

namespace {

Constraint covering_row(int n, Subset s, Rational rhs) {
  Constraint row;
  row.coeffs.assign(n, Rational(0));
  for (int p : s.points()) row.coeffs[p] = 1;
  row.relation = Relation::kGreaterEqual;
  row.rhs = std::move(rhs);
  return row;
}

LinearProgram empty_core_program(int n) {
  LinearProgram lp;
  lp.direction = Direction::kMinimize;
  lp.objective.assign(n, Rational(1));
  return lp;
}

// mu(A) for every mask.
std::vector<Rational> subset_sums(const std::vector<Rational>& weights) {
  std::vector<Rational> sums(std::size_t{1} << weights.size());
  for (std::uint32_t m = 1; m < sums.size(); ++m) {
    sums[m] = sums[m & (m - 1)] + weights[std::countr_zero(m)];
  }
  return sums;
}

}  // namespace

LinearProgram balancedness_lp(const Capacity& nu) {
  const int n = nu.ground().size();
  const std::uint32_t count = static_cast<std::uint32_t>(nu.ground().subset_count());
  LinearProgram lp;
  lp.direction = Direction::kMaximize;
  for (std::uint32_t m = 1; m < count; ++m) lp.objective.push_back(nu(Subset(m)));
  for (int p = 0; p < n; ++p) {
    Constraint row;
    row.coeffs.assign(count - 1, Rational(0));
    for (std::uint32_t m = 1; m < count; ++m) {
      if (Subset(m).contains(p)) row.coeffs[m - 1] = 1;
    }
    row.relation = Relation::kLessEqual;
    row.rhs = 1;
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

LinearProgram core_lp(const Capacity& nu) {
  const int n = nu.ground().size();
  LinearProgram lp = empty_core_program(n);
  for (std::uint32_t m = 1; m < nu.ground().subset_count(); ++m) {
    lp.constraints.push_back(covering_row(n, Subset(m), nu(Subset(m))));
  }
  return lp;
}

LinearProgram core_lp(const GeneratedCapacity& generated) {
  const int n = generated.ground().size();
  LinearProgram lp = empty_core_program(n);
  for (const auto& g : generated.generators()) {
    lp.constraints.push_back(covering_row(n, g.set, g.value));
  }
  lp.constraints.push_back(covering_row(n, generated.ground().full(), Rational(1)));
  return lp;
}

CoreSolution solve_core(const Capacity& nu) {
  const int n = nu.ground().size();
  CoreSolution out;
  out.program = empty_core_program(n);
  const Subset full = nu.ground().full();
  out.row_sets.push_back(full);
  out.program.constraints.push_back(covering_row(n, full, nu(full)));

  while (true) {
    ++out.rounds;
    out.tableau = TableauSnapshot{};
    const LPOutcome outcome = solve(out.program, &out.tableau);
    // Every restricted program is feasible (scale any point up) and bounded
    // below by 0, so anything but Optimal is a solver defect.
    const auto* opt = std::get_if<Optimal>(&outcome);
    if (opt == nullptr) throw std::logic_error("restricted core program not optimal");

    const auto sums = subset_sums(opt->point);
    std::optional<std::uint32_t> worst;
    Rational worst_gap(0);
    for (std::uint32_t m = 1; m < sums.size(); ++m) {
      Rational gap = nu(Subset(m)) - sums[m];
      if (gap > worst_gap) {
        worst = m;
        worst_gap = std::move(gap);
      }
    }
    if (!worst) {
      out.value = opt->value;
      out.measure = opt->point;
      for (std::size_t i = 0; i < out.row_sets.size(); ++i) {
        if (opt->duals[i] > 0) out.collection.push_back({out.row_sets[i], opt->duals[i]});
      }
      std::sort(out.collection.begin(), out.collection.end(),
                [](const WeightedSet& a, const WeightedSet& b) { return a.set < b.set; });
      return out;
    }
    out.row_sets.push_back(Subset(*worst));
    out.program.constraints.push_back(covering_row(n, Subset(*worst), nu(Subset(*worst))));
  }
}

Rational balancedness_value(const Capacity& nu) { return solve_core(nu).value; }

Verdict check_balanced(const Capacity& nu) {
  CoreSolution solution = solve_core(nu);
  if (solution.value == 1) {
    ProbMeasure witness(nu.ground(), std::move(solution.measure));
    if (!in_core(witness, nu)) throw std::logic_error("core witness failed re-verification");
    return Balanced{std::move(witness)};
  }
  BalancedViolation violation{std::move(solution.collection), solution.value};
  if (!is_valid_violation(violation, nu)) {
    throw std::logic_error("balancedness certificate failed re-verification");
  }
  return Unbalanced{std::move(violation)};
}

std::optional<ProbMeasure> core_element(const Capacity& nu) {
  CoreSolution solution = solve_core(nu);
  if (solution.value != 1) return std::nullopt;
  return ProbMeasure(nu.ground(), std::move(solution.measure));
}

std::optional<Subset> core_violation(const ProbMeasure& mu, const Capacity& nu) {
  require_same_ground(mu.ground(), nu.ground());
  const auto sums = subset_sums(mu.weights());
  for (std::uint32_t m = 0; m < sums.size(); ++m) {
    if (sums[m] < nu(Subset(m))) return Subset(m);
  }
  return std::nullopt;
}

bool in_core(const ProbMeasure& mu, const Capacity& nu) { return !core_violation(mu, nu); }

std::optional<ProbMeasure> core_element_generated(const GeneratedCapacity& generated) {
  const LPOutcome outcome = solve(core_lp(generated));
  const auto* opt = std::get_if<Optimal>(&outcome);
  if (opt == nullptr) throw std::logic_error("generator core program not optimal");
  if (opt->value != 1) return std::nullopt;
  return ProbMeasure(generated.ground(), opt->point);
}

bool is_valid_violation(const BalancedViolation& violation, const Capacity& nu) {
  const int n = nu.ground().size();
  std::vector<Rational> coverage(n);
  Rational total(0);
  for (const auto& item : violation.items) {
    if (item.weight <= 0 || !item.set.is_subset_of(nu.ground().full())) return false;
    for (int p : item.set.points()) coverage[p] += item.weight;
    total += item.weight * nu(item.set);
  }
  const bool covered = std::all_of(coverage.begin(), coverage.end(),
                                   [](const Rational& c) { return c <= 1; });
  return covered && total == violation.value && total > 1;
}

}  // namespace balcap
