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
#include "nashfpt/oracle.h"

#include <algorithm>

#include "nashfpt/support_solver.h"

namespace nashfpt {
namespace {

bool IsSubset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<OracleHit> OracleFind(const BimatrixGame& game, int k,
                                  SolveStats* stats) {
  std::vector<OracleHit> hits;
  for (int k1 = 1; k1 <= std::min(k, game.rows()); ++k1) {
    for (int k2 = 1; k2 <= std::min(k, game.cols()); ++k2) {
      EnumerateAllSupports(game.rows(), game.cols(), k1, k2,
                           [&](const Support& s) {
                             if (stats) ++stats->candidates;
                             auto p = SolveOnSupport(
                                 game, {s.rows, s.cols, SupportMode::kExact},
                                 stats);
                             if (p) hits.push_back({s, std::move(*p)});
                             return true;
                           });
    }
  }
  return hits;
}

std::vector<OracleHit> MinimalHits(const std::vector<OracleHit>& hits) {
  std::vector<OracleHit> out;
  for (const OracleHit& h : hits) {
    bool minimal = true;
    for (const OracleHit& other : hits) {
      if (other.support == h.support) continue;
      if (IsSubset(other.support.rows, h.support.rows) &&
          IsSubset(other.support.cols, h.support.cols)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(h);
  }
  return out;
}

std::vector<OracleHit> OracleMinimal(const BimatrixGame& game, int k) {
  return MinimalHits(OracleFind(game, k));
}

std::string ToString(StructureCase c) {
  switch (c) {
    case StructureCase::kZeroSubmatrix:
      return "zero-submatrix";
    case StructureCase::kGeneral:
      return "general";
    case StructureCase::kNonNegative:
      return "non-negative";
  }
  return "unknown";
}

std::vector<int> ExtendedSupportVertices(const GameGraph& g,
                                         const Support& s) {
  std::vector<char> in(g.NumVertices(), 0);
  for (int i : s.rows) {
    in[g.RowVertex(i)] = 1;
    for (int w : g.Neighbors(g.RowVertex(i))) in[w] = 1;
  }
  for (int j : s.cols) {
    in[g.ColVertex(j)] = 1;
    for (int w : g.Neighbors(g.ColVertex(j))) in[w] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.NumVertices(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

StructureReport CheckStructure(const BimatrixGame& game,
                               const std::vector<OracleHit>& minimal_hits) {
  const GameGraph g(game);
  StructureReport report;
  report.nonnegative_game = game.NonNegative();
  for (const OracleHit& hit : minimal_hits) {
    StructureEntry e{hit};
    const Support& s = hit.support;
    const std::vector<int> ext = ExtendedSupportVertices(g, s);
    for (int v : ext) {
      (g.IsRow(v) ? e.extended_rows : e.extended_cols).push_back(g.Index(v));
    }
    e.extended_components = g.CountComponents(ext);
    std::vector<int> support_vertices;
    for (int i : s.rows) support_vertices.push_back(g.RowVertex(i));
    for (int j : s.cols) support_vertices.push_back(g.ColVertex(j));
    e.support_components = g.CountComponents(support_vertices);
    e.zero_submatrix = game.A().Sub(s.rows, s.cols).IsZero() &&
                       game.B().Sub(s.rows, s.cols).IsZero();
    if (report.nonnegative_game) {
      e.structure_case = StructureCase::kNonNegative;
    } else if (e.zero_submatrix) {
      e.structure_case = StructureCase::kZeroSubmatrix;
    } else {
      e.structure_case = StructureCase::kGeneral;
    }
    auto [row_payoff, col_payoff] = Payoffs(game, hit.profile);
    e.nonnegative_payoffs = row_payoff.Sign() >= 0 && col_payoff.Sign() >= 0;
    e.support_dichotomy = (s.rows.size() == 1 && s.cols.size() == 1) ||
                          e.support_components == 1;
    report.entries.push_back(std::move(e));
  }
  return report;
}

StructureReport CheckStructure(const BimatrixGame& game, int k) {
  return CheckStructure(game, OracleMinimal(game, k));
}

}  // namespace nashfpt
