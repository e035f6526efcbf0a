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

// Exact dense-tableau simplex over Rational with Bland's rule.
//
// Every outcome carries a certificate that check_outcome() can verify by
// substitution alone:
//   Optimal     primal point and a dual vector with equal objective values.
//   Infeasible  Farkas multipliers y (one per row) with
//                 y_i >= 0 on <= rows, y_i <= 0 on >= rows, free on = rows,
//                 (y^T A)_j >= 0 for nonnegative variables, = 0 for free ones,
//                 y^T b < 0.
//               Any feasible x would give 0 <= y^T A x <= y^T b < 0.
//   Unbounded   a feasible point and a ray d that stays feasible and
//               strictly improves the objective.
//
// Dual sign convention for Optimal (the textbook dual of each direction):
//   maximize: y_i >= 0 on <= rows, <= 0 on >= rows; (A^T y)_j >= c_j
//   minimize: y_i <= 0 on <= rows, >= 0 on >= rows; (A^T y)_j <= c_j
// with equality in place of the inequality on free variables.

#ifndef BALCAP_SIMPLEX_HPP
#define BALCAP_SIMPLEX_HPP

#include <string>
#include <variant>
#include <vector>

#include "balcap/rational.hpp"

namespace balcap {

enum class Direction { kMinimize, kMaximize };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class VarBound { kNonNegative, kFree };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct LinearProgram {
  Direction direction = Direction::kMaximize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  // One entry per variable, or empty for "all nonnegative".
  std::vector<VarBound> bounds;

  int num_variables() const { return static_cast<int>(objective.size()); }
  VarBound bound(int j) const { return bounds.empty() ? VarBound::kNonNegative : bounds[j]; }
};

struct Optimal {
  Rational value;
  std::vector<Rational> point;
  std::vector<Rational> duals;
};

struct Infeasible {
  std::vector<Rational> farkas;
};

struct Unbounded {
  std::vector<Rational> point;
  std::vector<Rational> ray;
};

using LPOutcome = std::variant<Optimal, Infeasible, Unbounded>;

// Final tableau in the solver's internal standard form, for debugging.
struct TableauSnapshot {
  std::vector<std::string> columns;
  std::vector<int> basis;                  // column index per row
  std::vector<std::vector<Rational>> rows;  // coefficients followed by rhs
  std::vector<Rational> reduced_costs;     // objective row, last entry = value
  int pivots = 0;
};

// Throws Error(kDimensionMismatch) on ragged input. `snapshot`, when given,
// receives the final tableau.
LPOutcome solve(const LinearProgram& lp, TableauSnapshot* snapshot = nullptr);

// Re-verifies an outcome by substitution into `lp`; shares no state with
// the solver. Returns false on any dimension or certificate failure.
bool check_outcome(const LinearProgram& lp, const LPOutcome& outcome);

}  // namespace balcap

#endif  // BALCAP_SIMPLEX_HPP
