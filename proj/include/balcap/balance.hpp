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

// Balancedness and the core of a capacity.
//
// A capacity nu is balanced when every weighted collection (A_i, l_i),
// l_i >= 0, with sum_i l_i * chi_{A_i} <= 1 pointwise has
// sum_i l_i * nu(A_i) <= 1. Its core is the set of probability measures mu
// with mu(A) >= nu(A) for all A. The two LPs
//
//   (P)  maximize sum_A l_A nu(A)  s.t.  sum_{A containing x} l_A <= 1,  l >= 0
//   (D)  minimize sum_x mu_x       s.t.  mu(A) >= nu(A) for A != {},    mu >= 0
//
// are dual to each other. (P) includes A = X, so its optimum is >= 1; the
// core is nonempty iff the common optimum equals 1. An optimal mu of (D) is
// then a core element, and otherwise an optimal l of (P) is a violating
// collection. Weights are restricted to l >= 0 throughout.

#ifndef BALCAP_BALANCE_HPP
#define BALCAP_BALANCE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "balcap/domain.hpp"
#include "balcap/simplex.hpp"

namespace balcap {

struct WeightedSet {
  Subset set;
  Rational weight;

  bool operator==(const WeightedSet&) const = default;
};

// Items have strictly positive weights and appear in subset-mask order.
struct BalancedViolation {
  std::vector<WeightedSet> items;
  Rational value;

  bool operator==(const BalancedViolation&) const = default;
};

struct Balanced {
  ProbMeasure witness;
};

struct Unbalanced {
  BalancedViolation certificate;
};

using Verdict = std::variant<Balanced, Unbalanced>;

inline bool is_balanced(const Verdict& v) { return std::holds_alternative<Balanced>(v); }

// (P) with one variable per nonempty subset, variable index = mask - 1.
LinearProgram balancedness_lp(const Capacity& nu);
// (D) with one row per nonempty subset, row index = mask - 1.
LinearProgram core_lp(const Capacity& nu);
// (D) restricted to the generator rows plus the whole-set row.
LinearProgram core_lp(const GeneratedCapacity& generated);

// Result of solving (D) by row generation: start from the whole-set row,
// solve, add the most violated subset (largest nu(A) - mu(A), lowest mask on
// ties) and repeat until mu is feasible for every row.
struct CoreSolution {
  Rational value;
  std::vector<Rational> measure;        // optimal mu, sums to value
  std::vector<WeightedSet> collection;  // positive optimal duals, mask order
  std::vector<Subset> row_sets;         // subset behind each row of `program`
  LinearProgram program;                // final restricted program
  TableauSnapshot tableau;              // its final tableau
  int rounds = 0;
};

CoreSolution solve_core(const Capacity& nu);

// Optimum of (P); >= 1 always, == 1 iff nu is balanced.
Rational balancedness_value(const Capacity& nu);

// Both arms are re-verified by substitution before returning; a failed
// re-verification throws std::logic_error.
Verdict check_balanced(const Capacity& nu);

std::optional<ProbMeasure> core_element(const Capacity& nu);

// Lowest-mask subset with mu(A) < nu(A), if any.
std::optional<Subset> core_violation(const ProbMeasure& mu, const Capacity& nu);
bool in_core(const ProbMeasure& mu, const Capacity& nu);

// Same contract as core_element(realize(generated)); only the generator rows
// are needed since mu(F) >= mu(A_j) >= v_j whenever A_j is inside F.
std::optional<ProbMeasure> core_element_generated(const GeneratedCapacity& generated);

// sum l_i chi_{A_i} <= 1 pointwise, all l_i > 0, value == sum l_i nu(A_i) > 1.
bool is_valid_violation(const BalancedViolation& violation, const Capacity& nu);

}  // namespace balcap

#endif  // BALCAP_BALANCE_HPP
