// Copyright 2026 The nashfpt Authors.
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
#include "nashfpt/lp.h"

#include <stdexcept>
#include <utility>

namespace nashfpt {
namespace {

// Dense simplex tableau in canonical form: each row r reads
//   sum_j t(r, j) z_j = rhs(r),  with z_{basis[r]} the basic variable.
// cost holds the reduced costs c_j - c_B B^{-1} A_j of the current phase and
// cost_value the objective at the current basic solution.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, cols), rhs_(rows), basis_(rows),
        cost_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  int& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t pivots() const { return pivots_; }

  // Installs the phase objective c (length cols) and prices out the basis.
  void SetObjective(const Vector& c) {
    cost_ = c;
    cost_value_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb.IsZero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!t_(r, j).IsZero()) cost_[j] -= cb * t_(r, j);
      }
      cost_value_ += cb * rhs_[r];
    }
  }

  const Rational& objective_value() const { return cost_value_; }

  // Runs Bland's rule to optimality. Columns with allowed[j] == false never
  // enter. Returns false when the objective is unbounded.
  bool Optimize(const std::vector<bool>& allowed) {
    while (true) {
      int enter = -1;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost_[j].Sign() > 0) {
          enter = static_cast<int>(j);
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_(r, enter).Sign() <= 0) continue;
        Rational ratio = rhs_[r] / t_(r, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational inv = Rational(1) / t_(row, col);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!t_(row, j).IsZero()) t_(row, j) *= inv;
    }
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || t_(r, col).IsZero()) continue;
      const Rational f = t_(r, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!t_(row, j).IsZero()) t_(r, j) -= f * t_(row, j);
      }
      if (!rhs_[row].IsZero()) rhs_[r] -= f * rhs_[row];
    }
    if (!cost_[col].IsZero()) {
      const Rational f = cost_[col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!t_(row, j).IsZero()) cost_[j] -= f * t_(row, j);
      }
      cost_value_ += f * rhs_[row];
    }
    basis_[row] = static_cast<int>(col);
  }

  void DropRow(std::size_t row) {
    Matrix next(rows_ - 1, cols_);
    for (std::size_t r = 0, o = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t j = 0; j < cols_; ++j) next(o, j) = std::move(t_(r, j));
      ++o;
    }
    t_ = std::move(next);
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Matrix t_;
  Vector rhs_;
  std::vector<int> basis_;
  Vector cost_;
  Rational cost_value_;
  std::int64_t pivots_ = 0;
};

void CheckShape(const LinearProgram& lp) {
  const std::size_t n = lp.NumVars();
  if (lp.lower_bounds.size() != n) {
    throw std::invalid_argument("lp: lower_bounds length != number of variables");
  }
  for (const LinearConstraint& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw std::invalid_argument("lp: constraint width != number of variables");
    }
  }
}

}  // namespace

LinearProgram LinearProgram::NonNegative(std::size_t num_vars) {
  LinearProgram lp;
  lp.objective.assign(num_vars, Rational(0));
  lp.lower_bounds.assign(num_vars, Rational(0));
  return lp;
}

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpOutcome SolveLp(const LinearProgram& lp) {
  CheckShape(lp);
  const std::size_t n = lp.NumVars();
  const std::size_t m = lp.constraints.size();

  // Column layout: one shifted column per bounded variable, a (+, -) pair per
  // free variable, then one slack per inequality, then one artificial per row
  // that lacks a natural unit basic column.
  std::vector<int> plus_col(n), minus_col(n, -1);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = static_cast<int>(cols++);
    if (!lp.lower_bounds[j]) minus_col[j] = static_cast<int>(cols++);
  }
  const std::size_t structural = cols;

  // Row data after substituting bounds and normalising rhs >= 0.
  std::vector<Vector> row_coeffs(m);
  std::vector<Relation> row_rel(m);
  Vector row_rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& c = lp.constraints[i];
    Vector coeffs(structural);
    Rational rhs = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j].IsZero()) continue;
      coeffs[plus_col[j]] = c.coeffs[j];
      if (minus_col[j] >= 0) coeffs[minus_col[j]] = -c.coeffs[j];
      if (lp.lower_bounds[j]) rhs -= c.coeffs[j] * *lp.lower_bounds[j];
    }
    Relation rel = c.relation;
    if (rhs.Sign() < 0) {
      for (Rational& v : coeffs) v = -v;
      rhs = -rhs;
      if (rel == Relation::kLessEqual) {
        rel = Relation::kGreaterEqual;
      } else if (rel == Relation::kGreaterEqual) {
        rel = Relation::kLessEqual;
      }
    }
    row_coeffs[i] = std::move(coeffs);
    row_rel[i] = rel;
    row_rhs[i] = std::move(rhs);
  }

  std::vector<int> slack_col(m, -1), art_col(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (row_rel[i] != Relation::kEqual) slack_col[i] = static_cast<int>(cols++);
  }
  const std::size_t first_artificial = cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (row_rel[i] != Relation::kLessEqual) art_col[i] = static_cast<int>(cols++);
  }

  Tableau tab(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < structural; ++j) tab.at(i, j) = row_coeffs[i][j];
    if (slack_col[i] >= 0) {
      tab.at(i, slack_col[i]) = row_rel[i] == Relation::kLessEqual ? 1 : -1;
    }
    if (art_col[i] >= 0) tab.at(i, art_col[i]) = 1;
    tab.rhs(i) = row_rhs[i];
    tab.basis(i) = art_col[i] >= 0 ? art_col[i] : slack_col[i];
  }

  LpOutcome out;
  std::vector<bool> allowed(cols, true);

  // Phase 1: maximise -sum(artificials).
  if (first_artificial < cols) {
    Vector phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    tab.SetObjective(phase1);
    tab.Optimize(allowed);
    if (tab.objective_value().Sign() < 0) {
      out.status = LpStatus::kInfeasible;
      out.pivots = tab.pivots();
      return out;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < tab.rows();) {
      if (static_cast<std::size_t>(tab.basis(r)) < first_artificial) {
        ++r;
        continue;
      }
      int enter = -1;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!tab.at(r, j).IsZero()) {
          enter = static_cast<int>(j);
          break;
        }
      }
      if (enter >= 0) {
        tab.Pivot(r, enter);
        ++r;
      } else {
        tab.DropRow(r);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  // Phase 2.
  Vector phase2(cols);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[plus_col[j]] = lp.objective[j];
    if (minus_col[j] >= 0) phase2[minus_col[j]] = -lp.objective[j];
  }
  tab.SetObjective(phase2);
  const bool bounded = tab.Optimize(allowed);
  out.pivots = tab.pivots();
  if (!bounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  Vector z(cols);
  for (std::size_t r = 0; r < tab.rows(); ++r) z[tab.basis(r)] = tab.rhs(r);
  Vector x(n);
  Rational value;
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = z[plus_col[j]];
    if (minus_col[j] >= 0) x[j] -= z[minus_col[j]];
    if (lp.lower_bounds[j]) x[j] += *lp.lower_bounds[j];
    value += lp.objective[j] * x[j];
  }
  out.status = LpStatus::kOptimal;
  out.solution = std::move(x);
  out.value = std::move(value);
  return out;
}

bool IsFeasiblePoint(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.NumVars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower_bounds[j] && x[j] < *lp.lower_bounds[j]) return false;
  }
  for (const LinearConstraint& c : lp.constraints) {
    const Rational lhs = Dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace nashfpt
