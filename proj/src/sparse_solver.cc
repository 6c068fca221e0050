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
#include "nashfpt/sparse_solver.h"

#include <algorithm>
#include <stdexcept>

#include "nashfpt/combinatorics.h"
#include "nashfpt/support_solver.h"

namespace nashfpt {

int ValidateSparsity(const BimatrixGame& game) {
  int worst = 0;
  for (const Matrix* m : {&game.A(), &game.B()}) {
    std::vector<int> col_count(m->cols(), 0);
    for (std::size_t r = 0; r < m->rows(); ++r) {
      int row_count = 0;
      for (std::size_t c = 0; c < m->cols(); ++c) {
        if ((*m)(r, c).IsZero()) continue;
        ++row_count;
        ++col_count[c];
      }
      worst = std::max(worst, row_count);
    }
    for (int c : col_count) worst = std::max(worst, c);
  }
  return worst;
}

SparseInstance::SparseInstance(BimatrixGame game, int sparsity,
                               int max_support)
    : game_(std::move(game)), sparsity_(sparsity), max_support_(max_support) {
  if (max_support_ < 1) throw std::invalid_argument("support bound must be >= 1");
  if (sparsity_ < 0) throw std::invalid_argument("sparsity must be >= 0");
  const int actual = ValidateSparsity(game_);
  if (actual > sparsity_) {
    throw std::invalid_argument("game is " + std::to_string(actual) +
                                "-sparse, exceeds declared sparsity " +
                                std::to_string(sparsity_));
  }
}

namespace {

// Splits a candidate vertex set into the support pairs (I, J) whose extended
// support N[I u J] is exactly that set. Scratch marks are sized once per
// graph and cleared after every candidate, so the cost of a call depends on
// the candidate only.
class ExtendedSupportFilter {
 public:
  explicit ExtendedSupportFilter(const GameGraph& g)
      : g_(g), in_cand_(g.NumVertices(), 0), row_cover_(g.rows(), 0),
        col_cover_(g.cols(), 0) {}

  // Returns false if the visitor stopped the sweep.
  bool Run(const SubgraphCandidate& candidate, int k1, int k2,
           const std::function<bool(const Support&)>& visit) {
    rows_.clear();
    cols_.clear();
    for (int v : candidate.vertices) {
      (g_.IsRow(v) ? rows_ : cols_).push_back(g_.Index(v));
    }
    if (static_cast<int>(rows_.size()) < k1 ||
        static_cast<int>(cols_.size()) < k2) {
      return true;
    }
    for (int v : candidate.vertices) in_cand_[v] = 1;
    const bool completed = ForEachCombination(
        std::span<const int>(rows_), k1,
        [&](const std::vector<int>& I) { return WithRows(I, k2, visit); });
    for (int v : candidate.vertices) in_cand_[v] = 0;
    return completed;
  }

 private:
  bool WithRows(const std::vector<int>& I, int k2,
                const std::function<bool(const Support&)>& visit) {
    // N(I) must lie inside the candidate.
    for (int i : I) {
      for (int w : g_.Neighbors(g_.RowVertex(i))) {
        if (!in_cand_[w]) return true;
      }
    }
    for (int i : I) {
      for (int w : g_.Neighbors(g_.RowVertex(i))) ++col_cover_[g_.Index(w)];
    }
    // Candidate columns not adjacent to I must belong to J.
    std::vector<int> forced, optional;
    for (int j : cols_) (col_cover_[j] ? optional : forced).push_back(j);
    bool keep_going = true;
    const int free_slots = k2 - static_cast<int>(forced.size());
    if (free_slots >= 0) {
      keep_going = ForEachCombination(
          std::span<const int>(optional), free_slots,
          [&](const std::vector<int>& extra) {
            std::vector<int> J = forced;
            J.insert(J.end(), extra.begin(), extra.end());
            std::sort(J.begin(), J.end());
            if (!Closed(I, J)) return true;
            return visit(Support{I, std::move(J)});
          });
    }
    for (int i : I) {
      for (int w : g_.Neighbors(g_.RowVertex(i))) --col_cover_[g_.Index(w)];
    }
    return keep_going;
  }

  // N(J) inside the candidate, and every candidate row in I or next to J.
  bool Closed(const std::vector<int>& I, const std::vector<int>& J) {
    bool closed = true;
    for (int j : J) {
      for (int w : g_.Neighbors(g_.ColVertex(j))) {
        if (!in_cand_[w]) closed = false;
        ++row_cover_[w];
      }
    }
    if (closed) {
      for (int r : rows_) {
        if (!row_cover_[r] && !std::binary_search(I.begin(), I.end(), r)) {
          closed = false;
          break;
        }
      }
    }
    for (int j : J) {
      for (int w : g_.Neighbors(g_.ColVertex(j))) --row_cover_[w];
    }
    return closed;
  }

  const GameGraph& g_;
  std::vector<char> in_cand_;
  std::vector<int> row_cover_;  // rows covered by N(J)
  std::vector<int> col_cover_;  // columns covered by N(I)
  std::vector<int> rows_;
  std::vector<int> cols_;
};

}  // namespace

void ForEachSupportWithExtendedSupport(
    const GameGraph& g, const SubgraphCandidate& candidate, int k1, int k2,
    const std::function<bool(const Support&)>& visit) {
  ExtendedSupportFilter(g).Run(candidate, k1, k2, visit);
}

std::optional<MixedProfile> SparseSolve(const SparseInstance& inst,
                                        SolveStats* stats) {
  const BimatrixGame& game = inst.game();
  const int k = inst.max_support();
  const long long threshold =
      static_cast<long long>(inst.sparsity()) * static_cast<long long>(k);
  if (game.rows() <= threshold || game.cols() <= threshold) {
    return BaselineSolve(game, k, stats);
  }

  const GameGraph g(game);
  const int delta = MaxDegree(g);
  ExtendedSupportFilter filter(g);
  std::optional<MixedProfile> found;
  for (auto [k1, k2] : SupportSizeOrder(std::min(k, game.rows()),
                                        std::min(k, game.cols()))) {
    const int t_max =
        std::min(g.NumVertices(), (k1 + k2) * (delta + 1));
    for (int c = 1; c <= 2 && !found; ++c) {
      for (int t = k1 + k2; t <= t_max && !found; ++t) {
        EnumerationStats es = EnumerateSubgraphs(
            g, t, c,
            [&](const SubgraphCandidate& cand) {
              if (stats) ++stats->candidates;
              filter.Run(cand, k1, k2, [&](const Support& s) {
                    found = SolveOnSupport(
                        game, {s.rows, s.cols, SupportMode::kExact}, stats);
                    return !found.has_value();
                  });
              return !found.has_value();
            },
            /*deduplicate=*/false);
        if (stats) stats->branch_leaves += es.leaves;
      }
    }
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<MixedProfile> SparseSolveNonNegative(const SparseInstance& inst,
                                                   SolveStats* stats) {
  const BimatrixGame& game = inst.game();
  if (!game.NonNegative()) {
    throw std::invalid_argument("sparse-nonneg requires non-negative payoffs");
  }
  const int k = inst.max_support();
  const GameGraph g(game);
  std::optional<MixedProfile> found;
  auto try_support = [&](Support s) {
    if (stats) ++stats->candidates;
    found = SolveOnSupport(game, {std::move(s.rows), std::move(s.cols),
                                  SupportMode::kExact},
                           stats);
    return !found.has_value();
  };
  for (auto [k1, k2] : SupportSizeOrder(std::min(k, game.rows()),
                                        std::min(k, game.cols()))) {
    if (k1 == 1 && k2 == 1) {
      EnumerateAllSupports(game.rows(), game.cols(), 1, 1, try_support);
    } else {
      EnumerationStats es = EnumerateSubgraphs(
          g, k1 + k2, 1,
          [&](const SubgraphCandidate& cand) {
            Support s;
            for (int v : cand.vertices) {
              (g.IsRow(v) ? s.rows : s.cols).push_back(g.Index(v));
            }
            if (static_cast<int>(s.rows.size()) != k1) return true;
            return try_support(std::move(s));
          },
          /*deduplicate=*/false);
      if (stats) stats->branch_leaves += es.leaves;
    }
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace nashfpt
