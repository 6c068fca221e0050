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
#ifndef NASHFPT_SPARSE_SOLVER_H_
#define NASHFPT_SPARSE_SOLVER_H_

#include <optional>

#include "nashfpt/game.h"
#include "nashfpt/game_graph.h"
#include "nashfpt/stats.h"

namespace nashfpt {

// Smallest l such that every row and column of A and of B has at most l
// non-zero entries.
int ValidateSparsity(const BimatrixGame& game);

// An l-sparse game together with the support bound k. The constructor
// rejects games whose sparsity exceeds l.
class SparseInstance {
 public:
  SparseInstance(BimatrixGame game, int sparsity, int max_support);

  const BimatrixGame& game() const { return game_; }
  int sparsity() const { return sparsity_; }
  int max_support() const { return max_support_; }

 private:
  BimatrixGame game_;
  int sparsity_;
  int max_support_;
};

// Supports (I, J) whose extended support N[I u J] is exactly the vertex set
// of the candidate, with |I| = k1 and |J| = k2. The visitor returns false to
// stop.
void ForEachSupportWithExtendedSupport(
    const GameGraph& g, const SubgraphCandidate& candidate, int k1, int k2,
    const std::function<bool(const Support&)>& visit);

// Equilibrium with |S(x)|, |S(y)| <= k on the smallest support sizes
// (ordered by k1 + k2, then k1), found by enumerating candidate extended
// supports with one or two connected components. Falls back to plain
// support enumeration when min(m, n) <= l * k.
std::optional<MixedProfile> SparseSolve(const SparseInstance& inst,
                                        SolveStats* stats = nullptr);

// Variant for non-negative games: only 1x1 supports and connected support
// subgraphs on k1 + k2 vertices are tried. Throws std::invalid_argument on a
// negative payoff.
std::optional<MixedProfile> SparseSolveNonNegative(const SparseInstance& inst,
                                                   SolveStats* stats = nullptr);

}  // namespace nashfpt

#endif  // NASHFPT_SPARSE_SOLVER_H_
