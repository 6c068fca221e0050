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
#include "nashfpt/unbalanced_solver.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nashfpt/combinatorics.h"
#include "nashfpt/support_solver.h"

namespace nashfpt {

UnbalancedInstance::UnbalancedInstance(BimatrixGame game)
    : game_(std::move(game)) {
  if (!game_.NonNegative()) {
    throw std::invalid_argument("unbalanced games must have non-negative payoffs");
  }
  std::set<Rational> values(game_.A().data().begin(), game_.A().data().end());
  value_count_ = static_cast<int>(values.size());
}

ColumnClasses ComputeColumnClasses(const Matrix& a) {
  ColumnClasses out;
  out.class_of.assign(a.cols(), -1);
  std::map<Vector, int> index;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto [it, inserted] = index.emplace(a.Column(j), out.size());
    if (inserted) {
      out.members.emplace_back();
      out.representative.push_back(static_cast<int>(j));
    }
    out.members[it->second].push_back(static_cast<int>(j));
    out.class_of[j] = it->second;
  }
  return out;
}

ColumnClasses ComputeColumnClasses(const UnbalancedInstance& inst) {
  return ComputeColumnClasses(inst.game().A());
}

std::int64_t UnbalancedGuessBound(int k, int classes) {
  std::int64_t subsets = 0;
  for (int s = 1; s <= k + 1; ++s) {
    subsets = SaturatingAdd(subsets, Binomial(classes, s));
  }
  return SaturatingMul((std::int64_t{1} << k) - 1, subsets);
}

Vector MergeColumns(const Vector& y, int to, int from) {
  Vector out = y;
  out.at(to) += out.at(from);
  out[from] = 0;
  return out;
}

UnbalancedResult UnbalancedSolve(const UnbalancedInstance& inst,
                                 SolveStats* stats) {
  const BimatrixGame& game = inst.game();
  const int k = inst.k();
  const ColumnClasses classes = ComputeColumnClasses(inst);
  std::int64_t guesses = 0;
  std::optional<MixedProfile> found;

  for (auto [k1, k2] :
       SupportSizeOrder(k, std::min(k + 1, classes.size()))) {
    ForEachCombination(k, k1, [&](const std::vector<int>& rows) {
      return ForEachCombination(
          classes.size(), k2, [&](const std::vector<int>& chosen) {
            ++guesses;
            if (stats) ++stats->candidates;
            // The row player's side only sees A, which is constant on a
            // class, so it is decided once on the representatives.
            IndexSet reps;
            for (int c : chosen) reps.push_back(classes.representative[c]);
            if (stats) ++stats->lp_calls;
            std::optional<Vector> y_reps =
                SolveColumnMix(game.A(), rows, reps, SupportMode::kExact, stats);
            if (!y_reps) return true;
            // Column player's side: one member per chosen class, tried in
            // odometer order starting from the representatives.
            std::vector<std::size_t> pick(chosen.size(), 0);
            while (true) {
              IndexSet cols;
              for (std::size_t s = 0; s < chosen.size(); ++s) {
                cols.push_back(classes.members[chosen[s]][pick[s]]);
              }
              std::vector<std::pair<int, int>> order;  // (column, rep)
              for (std::size_t s = 0; s < chosen.size(); ++s) {
                order.emplace_back(cols[s], reps[s]);
              }
              std::sort(order.begin(), order.end());
              IndexSet sorted_cols;
              for (auto& [col, rep] : order) sorted_cols.push_back(col);
              if (stats) ++stats->lp_calls;
              std::optional<Vector> x = SolveRowMix(
                  game.B(), rows, sorted_cols, SupportMode::kExact, stats);
              if (x) {
                Vector y(game.cols());
                for (auto& [col, rep] : order) y[col] = (*y_reps)[rep];
                found = MixedProfile(std::move(*x), std::move(y));
                return false;
              }
              std::size_t s = 0;
              while (s < pick.size() &&
                     ++pick[s] == classes.members[chosen[s]].size()) {
                pick[s++] = 0;
              }
              if (s == pick.size()) return true;
            }
          });
    });
    if (found) break;
  }
  if (!found) {
    throw std::logic_error("unbalanced sweep found no equilibrium");
  }
  if (!VerifyEquilibrium(game, *found).IsEquilibrium()) {
    throw std::logic_error("unbalanced solver produced an unverified profile");
  }
  return {std::move(*found), guesses};
}

}  // namespace nashfpt
