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

#include "balcap/simplex.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>

#include "balcap/error.hpp"

namespace balcap {

namespace {

// Maximization tableau. Row r holds B^{-1}A and B^{-1}b; the objective row
// holds reduced costs c_B B^{-1} A_j - c_j, so the basis is optimal when no
// eligible column has a negative entry.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * (cols + 1)),
        objective_(cols + 1), basis_(rows, -1) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  const Rational& at(int r, int c) const {
    return cells_[static_cast<std::size_t>(r) * (cols_ + 1) + c];
  }
  const Rational& rhs(int r) const { return at(r, cols_); }
  const Rational& reduced_cost(int c) const { return objective_[c]; }
  const Rational& value() const { return objective_[cols_]; }
  int basic(int r) const { return basis_[r]; }
  void set_basic(int r, int c) { basis_[r] = c; }
  int pivots() const { return pivots_; }

  void price(const std::vector<Rational>& cost) {
    for (int c = 0; c <= cols_; ++c) {
      Rational z = c < cols_ ? Rational(-cost[c]) : Rational(0);
      for (int r = 0; r < rows_; ++r) {
        const Rational& entry = at(r, c);
        if (entry != 0 && cost[basis_[r]] != 0) z += cost[basis_[r]] * entry;
      }
      objective_[c] = std::move(z);
    }
  }

  // Bland: the lowest-index eligible column with negative reduced cost.
  std::optional<int> entering(const std::vector<bool>& eligible) const {
    for (int c = 0; c < cols_; ++c) {
      if (eligible[c] && objective_[c] < 0) return c;
    }
    return std::nullopt;
  }

  // Minimum ratio test; ties go to the row whose basic column index is
  // lowest (Bland). nullopt means the column is unbounded.
  std::optional<int> leaving(int col) const {
    std::optional<int> best;
    Rational best_ratio;
    for (int r = 0; r < rows_; ++r) {
      const Rational& entry = at(r, col);
      if (entry <= 0) continue;
      Rational ratio = rhs(r) / entry;
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    const Rational pivot_value = at(row, col);
    std::vector<int> support;
    for (int c = 0; c <= cols_; ++c) {
      if (at(row, c) != 0) {
        at(row, c) /= pivot_value;
        support.push_back(c);
      }
    }
    auto eliminate = [&](Rational* line) {
      const Rational factor = line[col];
      if (factor == 0) return;
      for (int c : support) line[c] -= factor * at(row, c);
    };
    for (int r = 0; r < rows_; ++r) {
      if (r != row) eliminate(&at(r, 0));
    }
    eliminate(objective_.data());
    basis_[row] = col;
    ++pivots_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> cells_;
  std::vector<Rational> objective_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

enum class ColumnKind { kStructural, kNegativePart, kSlack, kSurplus, kArtificial };

struct StandardForm {
  Tableau tableau;
  std::vector<ColumnKind> kinds;
  std::vector<std::string> names;
  std::vector<int> original;       // structural/negative-part column -> variable
  std::vector<int> negative_part;  // variable -> its negative column or -1
  std::vector<int> identity_col;   // row -> column that started as e_row
  std::vector<int> row_sign;       // +1, or -1 if the row was negated
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "bounds vector does not match objective width");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coeffs.size() != n) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "constraint " + std::to_string(i) + " has " +
                      std::to_string(lp.constraints[i].coeffs.size()) + " coefficients, expected " +
                      std::to_string(n));
    }
  }
}

Relation flipped(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual: return Relation::kGreaterEqual;
    case Relation::kGreaterEqual: return Relation::kLessEqual;
    case Relation::kEqual: return Relation::kEqual;
  }
  return rel;
}

StandardForm build(const LinearProgram& lp) {
  const int n = lp.num_variables();
  const int m = static_cast<int>(lp.constraints.size());

  std::vector<int> negative_part(n, -1);
  std::vector<int> original;
  std::vector<ColumnKind> kinds;
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) {
    original.push_back(j);
    kinds.push_back(ColumnKind::kStructural);
    names.push_back("x" + std::to_string(j));
  }
  for (int j = 0; j < n; ++j) {
    if (lp.bound(j) == VarBound::kFree) {
      negative_part[j] = static_cast<int>(kinds.size());
      original.push_back(j);
      kinds.push_back(ColumnKind::kNegativePart);
      names.push_back("x" + std::to_string(j) + "-");
    }
  }

  std::vector<int> row_sign(m, 1);
  std::vector<Relation> relation(m);
  std::vector<int> slack_col(m, -1);
  std::vector<int> artificial_col(m, -1);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    row_sign[i] = row.rhs < 0 ? -1 : 1;
    relation[i] = row_sign[i] < 0 ? flipped(row.relation) : row.relation;
    if (relation[i] != Relation::kEqual) {
      slack_col[i] = static_cast<int>(kinds.size());
      const bool slack = relation[i] == Relation::kLessEqual;
      kinds.push_back(slack ? ColumnKind::kSlack : ColumnKind::kSurplus);
      names.push_back((slack ? "s" : "e") + std::to_string(i));
    }
  }
  for (int i = 0; i < m; ++i) {
    if (relation[i] != Relation::kLessEqual) {
      artificial_col[i] = static_cast<int>(kinds.size());
      kinds.push_back(ColumnKind::kArtificial);
      names.push_back("a" + std::to_string(i));
    }
  }

  Tableau t(m, static_cast<int>(kinds.size()));
  std::vector<int> identity_col(m);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    const Rational sign(row_sign[i]);
    for (int j = 0; j < n; ++j) {
      if (row.coeffs[j] == 0) continue;
      t.at(i, j) = sign * row.coeffs[j];
      if (negative_part[j] >= 0) t.at(i, negative_part[j]) = -t.at(i, j);
    }
    if (slack_col[i] >= 0) t.at(i, slack_col[i]) = relation[i] == Relation::kLessEqual ? 1 : -1;
    if (artificial_col[i] >= 0) t.at(i, artificial_col[i]) = 1;
    t.at(i, t.cols()) = sign * row.rhs;
    identity_col[i] = relation[i] == Relation::kLessEqual ? slack_col[i] : artificial_col[i];
    t.set_basic(i, identity_col[i]);
  }
  return StandardForm{std::move(t),        std::move(kinds),        std::move(names),
                      std::move(original), std::move(negative_part), std::move(identity_col),
                      std::move(row_sign)};
}

// Runs Bland pivots until optimal. Returns the unbounded column, if any.
std::optional<int> optimize(Tableau& t, const std::vector<bool>& eligible) {
  while (auto col = t.entering(eligible)) {
    const auto row = t.leaving(*col);
    if (!row) return col;
    t.pivot(*row, *col);
  }
  return std::nullopt;
}

std::vector<Rational> basic_solution(const StandardForm& sf, int n) {
  std::vector<Rational> expanded(sf.tableau.cols());
  for (int r = 0; r < sf.tableau.rows(); ++r) expanded[sf.tableau.basic(r)] = sf.tableau.rhs(r);
  std::vector<Rational> x(n);
  for (int c = 0; c < static_cast<int>(sf.original.size()); ++c) {
    if (sf.kinds[c] == ColumnKind::kStructural) x[sf.original[c]] += expanded[c];
    if (sf.kinds[c] == ColumnKind::kNegativePart) x[sf.original[c]] -= expanded[c];
  }
  return x;
}

// Row multipliers y = c_B B^{-1}, read from the identity columns, mapped
// back to the caller's row orientation.
std::vector<Rational> row_multipliers(const StandardForm& sf, const std::vector<Rational>& cost) {
  std::vector<Rational> y(sf.tableau.rows());
  for (int i = 0; i < sf.tableau.rows(); ++i) {
    const int c = sf.identity_col[i];
    y[i] = Rational(sf.row_sign[i]) * (sf.tableau.reduced_cost(c) + cost[c]);
  }
  return y;
}

void fill_snapshot(const StandardForm& sf, TableauSnapshot* snapshot) {
  if (snapshot == nullptr) return;
  const Tableau& t = sf.tableau;
  snapshot->columns = sf.names;
  snapshot->basis.assign(t.rows(), 0);
  snapshot->rows.assign(t.rows(), {});
  for (int r = 0; r < t.rows(); ++r) {
    snapshot->basis[r] = t.basic(r);
    for (int c = 0; c <= t.cols(); ++c) snapshot->rows[r].push_back(t.at(r, c));
  }
  snapshot->reduced_costs.clear();
  for (int c = 0; c <= t.cols(); ++c) snapshot->reduced_costs.push_back(t.reduced_cost(c));
  snapshot->pivots = t.pivots();
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

bool satisfies(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
    case Relation::kEqual: return lhs == rhs;
  }
  return false;
}

bool primal_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.objective.size()) return false;
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.bound(j) == VarBound::kNonNegative && x[j] < 0) return false;
  }
  for (const auto& row : lp.constraints) {
    if (!satisfies(dot(row.coeffs, x), row.relation, row.rhs)) return false;
  }
  return true;
}

// A^T y, column by column.
std::vector<Rational> transpose_times(const LinearProgram& lp, const std::vector<Rational>& y) {
  std::vector<Rational> out(lp.objective.size());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (y[i] == 0) continue;
    const auto& coeffs = lp.constraints[i].coeffs;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] != 0) out[j] += y[i] * coeffs[j];
    }
  }
  return out;
}

// Sign a row multiplier must have when the row is read as "<=" with a
// nonnegative weight: +1 for <=, -1 for >=, 0 (free) for =.
int row_orientation(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual: return 1;
    case Relation::kGreaterEqual: return -1;
    case Relation::kEqual: return 0;
  }
  return 0;
}

bool check_optimal(const LinearProgram& lp, const Optimal& opt) {
  if (opt.duals.size() != lp.constraints.size()) return false;
  if (!primal_feasible(lp, opt.point)) return false;
  if (dot(lp.objective, opt.point) != opt.value) return false;

  const bool maximize = lp.direction == Direction::kMaximize;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const int orient = row_orientation(lp.constraints[i].relation) * (maximize ? 1 : -1);
    if (orient > 0 && opt.duals[i] < 0) return false;
    if (orient < 0 && opt.duals[i] > 0) return false;
  }
  const auto aty = transpose_times(lp, opt.duals);
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.bound(j) == VarBound::kFree) {
      if (aty[j] != lp.objective[j]) return false;
    } else if (maximize ? aty[j] < lp.objective[j] : aty[j] > lp.objective[j]) {
      return false;
    }
  }
  std::vector<Rational> b;
  for (const auto& row : lp.constraints) b.push_back(row.rhs);
  return dot(b, opt.duals) == opt.value;
}

bool check_infeasible(const LinearProgram& lp, const Infeasible& inf) {
  const auto& y = inf.farkas;
  if (y.size() != lp.constraints.size()) return false;
  Rational yb(0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int orient = row_orientation(lp.constraints[i].relation);
    if (orient > 0 && y[i] < 0) return false;
    if (orient < 0 && y[i] > 0) return false;
    yb += y[i] * lp.constraints[i].rhs;
  }
  const auto aty = transpose_times(lp, y);
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.bound(j) == VarBound::kFree ? aty[j] != 0 : aty[j] < 0) return false;
  }
  return yb < 0;
}

bool check_unbounded(const LinearProgram& lp, const Unbounded& unb) {
  if (!primal_feasible(lp, unb.point)) return false;
  const auto& d = unb.ray;
  if (d.size() != lp.objective.size()) return false;
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.bound(j) == VarBound::kNonNegative && d[j] < 0) return false;
  }
  for (const auto& row : lp.constraints) {
    if (!satisfies(dot(row.coeffs, d), row.relation, Rational(0))) return false;
  }
  const Rational gain = dot(lp.objective, d);
  return lp.direction == Direction::kMaximize ? gain > 0 : gain < 0;
}

}  // namespace

LPOutcome solve(const LinearProgram& lp, TableauSnapshot* snapshot) {
  validate(lp);
  const int n = lp.num_variables();
  StandardForm sf = build(lp);
  Tableau& t = sf.tableau;
  const int cols = t.cols();

  bool has_artificial = false;
  std::vector<Rational> phase_one_cost(cols + 1);
  for (int c = 0; c < cols; ++c) {
    if (sf.kinds[c] == ColumnKind::kArtificial) {
      phase_one_cost[c] = -1;
      has_artificial = true;
    }
  }

  if (has_artificial) {
    t.price(phase_one_cost);
    const std::vector<bool> all(cols, true);
    // Phase one maximizes -sum(artificials) <= 0, so it is never unbounded.
    [[maybe_unused]] const auto unbounded = optimize(t, all);
    assert(!unbounded);
    if (t.value() < 0) {
      fill_snapshot(sf, snapshot);
      return Infeasible{row_multipliers(sf, phase_one_cost)};
    }
    // Drive zero-level artificials out of the basis where possible. A row
    // with no nonzero non-artificial entry is redundant; its artificial stays
    // basic at 0 and no later pivot can touch that row.
    for (int r = 0; r < t.rows(); ++r) {
      if (sf.kinds[t.basic(r)] != ColumnKind::kArtificial) continue;
      for (int c = 0; c < cols; ++c) {
        if (sf.kinds[c] != ColumnKind::kArtificial && t.at(r, c) != 0) {
          t.pivot(r, c);
          break;
        }
      }
    }
  }

  const bool maximize = lp.direction == Direction::kMaximize;
  std::vector<Rational> cost(cols + 1);
  for (int j = 0; j < n; ++j) {
    cost[j] = maximize ? lp.objective[j] : Rational(-lp.objective[j]);
    if (sf.negative_part[j] >= 0) cost[sf.negative_part[j]] = -cost[j];
  }
  std::vector<bool> eligible(cols);
  for (int c = 0; c < cols; ++c) eligible[c] = sf.kinds[c] != ColumnKind::kArtificial;

  t.price(cost);
  if (const auto col = optimize(t, eligible)) {
    Unbounded result;
    result.point = basic_solution(sf, n);
    std::vector<Rational> direction(cols);
    direction[*col] = 1;
    for (int r = 0; r < t.rows(); ++r) direction[t.basic(r)] = -t.at(r, *col);
    result.ray.assign(n, Rational(0));
    for (int c = 0; c < static_cast<int>(sf.original.size()); ++c) {
      if (sf.kinds[c] == ColumnKind::kStructural) result.ray[sf.original[c]] += direction[c];
      if (sf.kinds[c] == ColumnKind::kNegativePart) result.ray[sf.original[c]] -= direction[c];
    }
    fill_snapshot(sf, snapshot);
    return result;
  }

  Optimal result;
  result.point = basic_solution(sf, n);
  result.value = maximize ? t.value() : Rational(-t.value());
  result.duals = row_multipliers(sf, cost);
  if (!maximize) {
    for (auto& y : result.duals) y = -y;
  }
  fill_snapshot(sf, snapshot);
  return result;
}

bool check_outcome(const LinearProgram& lp, const LPOutcome& outcome) {
  if (!lp.bounds.empty() && lp.bounds.size() != lp.objective.size()) return false;
  for (const auto& row : lp.constraints) {
    if (row.coeffs.size() != lp.objective.size()) return false;
  }
  if (const auto* opt = std::get_if<Optimal>(&outcome)) return check_optimal(lp, *opt);
  if (const auto* inf = std::get_if<Infeasible>(&outcome)) return check_infeasible(lp, *inf);
  return check_unbounded(lp, std::get<Unbounded>(outcome));
}

}  // namespace balcap
