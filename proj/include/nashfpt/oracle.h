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
#ifndef NASHFPT_ORACLE_H_
#define NASHFPT_ORACLE_H_

#include <string>
#include <vector>

#include "nashfpt/game.h"
#include "nashfpt/game_graph.h"
#include "nashfpt/stats.h"

namespace nashfpt {

struct OracleHit {
  Support support;
  MixedProfile profile;
};

// Exhaustive sweep over every (I, J) with |I|, |J| <= k, each decided with an
// exact-support query. Hits are ordered by |I|, then |J|, then
// lexicographically. Meant for desk-size games.
std::vector<OracleHit> OracleFind(const BimatrixGame& game, int k,
                                  SolveStats* stats = nullptr);

// Hits whose supports contain no other hit's supports componentwise with a
// strict inclusion on at least one side.
std::vector<OracleHit> MinimalHits(const std::vector<OracleHit>& hits);
std::vector<OracleHit> OracleMinimal(const BimatrixGame& game, int k);

// Which connectivity argument covers a minimal equilibrium.
enum class StructureCase {
  kZeroSubmatrix,  // A and B vanish on S(x) x S(y)
  kGeneral,        // some non-zero entry on S(x) x S(y)
  kNonNegative,    // game has no negative payoff
};

std::string ToString(StructureCase c);

struct StructureEntry {
  OracleHit hit;
  std::vector<int> extended_rows = {};  // S(x) u N(S(y))
  std::vector<int> extended_cols = {};  // S(y) u N(S(x))
  int extended_components = 0;     // components of G[N[S(x) u S(y)]]
  int support_components = 0;      // components of G[S(x) u S(y)]
  StructureCase structure_case = StructureCase::kGeneral;
  bool zero_submatrix = false;
  bool nonnegative_payoffs = false;
  // Either |S(x)| = |S(y)| = 1 or G[S(x) u S(y)] is connected.
  bool support_dichotomy = false;
};

struct StructureReport {
  bool nonnegative_game = false;
  std::vector<StructureEntry> entries;
};

// Extended supports of (I, J) as sorted global vertex ids of g.
std::vector<int> ExtendedSupportVertices(const GameGraph& g,
                                         const Support& s);

StructureReport CheckStructure(const BimatrixGame& game, int k);
StructureReport CheckStructure(const BimatrixGame& game,
                               const std::vector<OracleHit>& minimal_hits);

}  // namespace nashfpt

#endif  // NASHFPT_ORACLE_H_
