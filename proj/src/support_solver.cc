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
#include "nashfpt/support_solver.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nashfpt/combinatorics.h"
#include "nashfpt/lp.h"

namespace nashfpt {
namespace {

void CheckIndices(const IndexSet& s, int bound, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] >= bound || (k && s[k] <= s[k - 1])) {
      throw std::invalid_argument(std::string(what) +
                                  " must be sorted, distinct and in range");
    }
  }
}

// Two opponent strategies: the mix is (q, 1 - q) and every constraint is an
// affine condition on q, so feasibility is an exact interval intersection.
// Returns the midpoint of the feasible interval, or its single point.
std::optional<Vector> SolveOnSegment(const std::vector<Vector>& equal_rows,
                                     const std::set<Vector>& others,
                                     SupportMode mode) {
  const bool exact = mode == SupportMode::kExact;
  Rational lo = 0, hi = 1;
  bool lo_open = exact, hi_open = exact;
  auto raise = [&](const Rational& bound, bool open) {
    if (bound > lo || (bound == lo && open)) {
      lo = bound;
      lo_open = open;
    }
  };
  auto lower = [&](const Rational& bound, bool open) {
    if (bound < hi || (bound == hi && open)) {
      hi = bound;
      hi_open = open;
    }
  };
  // d . (q, 1 - q) = alpha q + beta.
  auto affine = [](const Vector& d) {
    return std::pair<Rational, Rational>(d[0] - d[1], d[1]);
  };
  const Vector& e = equal_rows.front();
  for (std::size_t i = 1; i < equal_rows.size(); ++i) {
    const auto [alpha, beta] =
        affine({e[0] - equal_rows[i][0], e[1] - equal_rows[i][1]});
    if (alpha.IsZero()) {
      if (!beta.IsZero()) return std::nullopt;
      continue;
    }
    const Rational root = -beta / alpha;
    raise(root, false);
    lower(root, false);
  }
  for (const Vector& o : others) {
    // e . y >= o . y
    const auto [alpha, beta] = affine({e[0] - o[0], e[1] - o[1]});
    if (alpha.IsZero()) {
      if (beta.Sign() < 0) return std::nullopt;
      continue;
    }
    const Rational root = -beta / alpha;
    if (alpha.Sign() > 0) {
      raise(root, false);
    } else {
      lower(root, false);
    }
  }
  if (lo > hi) return std::nullopt;
  if (lo == hi) {
    if (lo_open || hi_open) return std::nullopt;
    return Vector{lo, Rational(1) - lo};
  }
  const Rational mid = (lo + hi) / 2;
  return Vector{mid, Rational(1) - mid};
}

// Generic indifference problem. The "own" player has strategies 0..own-1 and
// the payoff of own strategy r against opponent strategy s is payoff(r, s).
// Find a mix q over opp_support so that every r in own_support attains the
// maximum of sum_s payoff(r, s) q_s over all r.
template <typename Payoff>
std::optional<Vector> SolveIndifference(int own, int opp,
                                        const IndexSet& own_support,
                                        const IndexSet& opp_support,
                                        SupportMode mode, Payoff payoff,
                                        SolveStats* stats) {
  const std::size_t width = opp_support.size();
  auto restriction = [&](int r) {
    Vector v(width);
    for (std::size_t k = 0; k < width; ++k) v[k] = payoff(r, opp_support[k]);
    return v;
  };
  auto expand = [&](const Vector& q) {
    Vector full(opp);
    for (std::size_t k = 0; k < width; ++k) full[opp_support[k]] = q[k];
    return full;
  };

  std::vector<Vector> equal_rows;
  for (int r : own_support) equal_rows.push_back(restriction(r));
  std::vector<char> in_support(own, 0);
  for (int r : own_support) in_support[r] = 1;

  // Best-reply constraints only depend on the restricted row, so identical
  // rows collapse to one constraint. All-zero restrictions are common in
  // sparse games and are detected without building the vector.
  std::set<Vector> others;
  {
    const std::set<Vector> inside(equal_rows.begin(), equal_rows.end());
    bool zero_row = false;
    for (int r = 0; r < own; ++r) {
      if (in_support[r]) continue;
      bool all_zero = true;
      for (int s : opp_support) {
        if (!payoff(r, s).IsZero()) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) {
        zero_row = true;
        continue;
      }
      Vector v = restriction(r);
      if (!inside.count(v)) others.insert(std::move(v));
    }
    if (zero_row) {
      Vector zero(width);
      if (!inside.count(zero)) others.insert(std::move(zero));
    }
  }

  // Dominance: under exact mode every q_k is positive, so a row that is at
  // least as good everywhere on the support and better somewhere beats the
  // dominated supported row. Under within mode only a row better in every
  // coordinate is conclusive.
  auto dominates = [&](const Vector& hi, const Vector& lo) {
    bool strict_somewhere = false, strict_everywhere = true;
    for (std::size_t k = 0; k < width; ++k) {
      const auto cmp = hi[k] <=> lo[k];
      if (cmp < 0) return false;
      if (cmp > 0) {
        strict_somewhere = true;
      } else {
        strict_everywhere = false;
      }
    }
    return mode == SupportMode::kExact ? strict_somewhere : strict_everywhere;
  };
  for (const Vector& e : equal_rows) {
    for (const Vector& o : others) {
      if (dominates(o, e)) return std::nullopt;
    }
    for (const Vector& f : equal_rows) {
      if (dominates(f, e)) return std::nullopt;
    }
  }

  // Equality system: sum q = 1 and row_i . q - v = 0 for the supported rows.
  // When it pins down a single point the verdict needs no simplex.
  {
    Matrix m(equal_rows.size() + 1, width + 1);
    Vector rhs(equal_rows.size() + 1);
    for (std::size_t k = 0; k < width; ++k) m(0, k) = 1;
    rhs[0] = 1;
    for (std::size_t i = 0; i < equal_rows.size(); ++i) {
      for (std::size_t k = 0; k < width; ++k) m(i + 1, k) = equal_rows[i][k];
      m(i + 1, width) = -1;
    }
    LinearSystemSolution sys = SolveLinearSystem(m, rhs);
    if (!sys.consistent) return std::nullopt;
    if (sys.Unique()) {
      const Vector& sol = *sys.particular;
      for (std::size_t k = 0; k < width; ++k) {
        if (sol[k].Sign() < 0) return std::nullopt;
        if (mode == SupportMode::kExact && sol[k].IsZero()) return std::nullopt;
      }
      const Rational& value = sol[width];
      for (const Vector& o : others) {
        if (Dot(o, std::span<const Rational>(sol.data(), width)) > value) {
          return std::nullopt;
        }
      }
      return expand(Vector(sol.begin(), sol.begin() + width));
    }
  }

  if (width == 2) {
    std::optional<Vector> q = SolveOnSegment(equal_rows, others, mode);
    if (!q) return std::nullopt;
    return expand(*q);
  }

  // Variables: q_0..q_{w-1} >= 0, v free, and for exact mode a slack d with
  // q_k >= d, d <= 1, maximised.
  const bool exact = mode == SupportMode::kExact;
  const std::size_t nv = width + 1 + (exact ? 1 : 0);
  LinearProgram lp = LinearProgram::NonNegative(nv);
  lp.lower_bounds[width] = std::nullopt;
  if (exact) {
    lp.lower_bounds[width + 1] = std::nullopt;
    lp.objective[width + 1] = 1;
  }
  {
    Vector sum(nv);
    for (std::size_t k = 0; k < width; ++k) sum[k] = 1;
    lp.Add(std::move(sum), Relation::kEqual, 1);
  }
  for (const Vector& row : equal_rows) {
    Vector c(nv);
    std::copy(row.begin(), row.end(), c.begin());
    c[width] = -1;
    lp.Add(std::move(c), Relation::kEqual, 0);
  }
  for (const Vector& row : others) {
    Vector c(nv);
    std::copy(row.begin(), row.end(), c.begin());
    c[width] = -1;
    lp.Add(std::move(c), Relation::kLessEqual, 0);
  }
  if (exact) {
    for (std::size_t k = 0; k < width; ++k) {
      Vector c(nv);
      c[k] = 1;
      c[width + 1] = -1;
      lp.Add(std::move(c), Relation::kGreaterEqual, 0);
    }
    Vector cap(nv);
    cap[width + 1] = 1;
    lp.Add(std::move(cap), Relation::kLessEqual, 1);
  }
  if (stats) ++stats->lp_solves;
  LpOutcome out = SolveLp(lp);
  if (out.status != LpStatus::kOptimal) return std::nullopt;
  if (exact && out.value->Sign() <= 0) return std::nullopt;
  Vector q(out.solution->begin(), out.solution->begin() + width);
  return expand(q);
}

}  // namespace

std::optional<Vector> SolveColumnMix(const Matrix& a, const IndexSet& rows,
                                     const IndexSet& cols, SupportMode mode,
                                     SolveStats* stats) {
  CheckIndices(rows, static_cast<int>(a.rows()), "row support");
  CheckIndices(cols, static_cast<int>(a.cols()), "column support");
  return SolveIndifference(
      static_cast<int>(a.rows()), static_cast<int>(a.cols()), rows, cols, mode,
      [&a](int r, int c) -> const Rational& { return a(r, c); }, stats);
}

std::optional<Vector> SolveRowMix(const Matrix& b, const IndexSet& rows,
                                  const IndexSet& cols, SupportMode mode,
                                  SolveStats* stats) {
  CheckIndices(rows, static_cast<int>(b.rows()), "row support");
  CheckIndices(cols, static_cast<int>(b.cols()), "column support");
  return SolveIndifference(
      static_cast<int>(b.cols()), static_cast<int>(b.rows()), cols, rows, mode,
      [&b](int c, int r) -> const Rational& { return b(r, c); }, stats);
}

std::optional<MixedProfile> SolveOnSupport(const BimatrixGame& game,
                                           const SupportQuery& query,
                                           SolveStats* stats) {
  if (stats) ++stats->lp_calls;
  std::optional<Vector> y =
      SolveColumnMix(game.A(), query.rows, query.cols, query.mode, stats);
  if (!y) return std::nullopt;
  std::optional<Vector> x =
      SolveRowMix(game.B(), query.rows, query.cols, query.mode, stats);
  if (!x) return std::nullopt;
  return MixedProfile(std::move(*x), std::move(*y));
}

void EnumerateAllSupports(int rows, int cols, int k1, int k2,
                          const std::function<bool(const Support&)>& visit) {
  ForEachCombination(rows, k1, [&](const std::vector<int>& i) {
    return ForEachCombination(cols, k2, [&](const std::vector<int>& j) {
      return visit(Support{i, j});
    });
  });
}

std::vector<Support> AllSupports(int rows, int cols, int k1, int k2) {
  std::vector<Support> out;
  EnumerateAllSupports(rows, cols, k1, k2, [&](const Support& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::optional<MixedProfile> BaselineSolve(const BimatrixGame& game,
                                          int max_support, SolveStats* stats) {
  std::optional<MixedProfile> found;
  for (auto [k1, k2] : SupportSizeOrder(std::min(max_support, game.rows()),
                                        std::min(max_support, game.cols()))) {
    EnumerateAllSupports(game.rows(), game.cols(), k1, k2,
                         [&](const Support& s) {
                           if (stats) ++stats->candidates;
                           found = SolveOnSupport(
                               game, {s.rows, s.cols, SupportMode::kExact},
                               stats);
                           return !found.has_value();
                         });
    if (found) return found;
  }
  return std::nullopt;
}

std::int64_t BaselineQueryCount(int rows, int cols, int max_support) {
  std::int64_t row_choices = 0, col_choices = 0;
  for (int k = 1; k <= std::min(max_support, rows); ++k) {
    row_choices = SaturatingAdd(row_choices, Binomial(rows, k));
  }
  for (int k = 1; k <= std::min(max_support, cols); ++k) {
    col_choices = SaturatingAdd(col_choices, Binomial(cols, k));
  }
  return SaturatingMul(row_choices, col_choices);
}

}  // namespace nashfpt
