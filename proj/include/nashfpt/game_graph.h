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
#ifndef NASHFPT_GAME_GRAPH_H_
#define NASHFPT_GAME_GRAPH_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "nashfpt/game.h"

namespace nashfpt {

// Bipartite graph of a game. Vertices 0..m-1 are rows, m..m+n-1 are columns;
// row i and column j are adjacent iff A(i,j) != 0 or B(i,j) != 0.
class GameGraph {
 public:
  GameGraph(int rows, int cols);
  explicit GameGraph(const BimatrixGame& game);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int NumVertices() const { return rows_ + cols_; }

  int RowVertex(int i) const { return i; }
  int ColVertex(int j) const { return rows_ + j; }
  bool IsRow(int v) const { return v < rows_; }
  // Row or column index of a vertex within its side.
  int Index(int v) const { return v < rows_ ? v : v - rows_; }

  // Adds the edge (row i, column j); idempotent.
  void AddEdge(int i, int j);
  bool HasEdge(int i, int j) const;

  // Sorted neighbour list of a vertex (global vertex ids).
  const std::vector<int>& Neighbors(int v) const { return adj_[v]; }
  int Degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::int64_t NumEdges() const;

  // Sorted edge list as (row index, column index).
  std::vector<std::pair<int, int>> Edges() const;

  // Number of connected components of the subgraph induced by vertices.
  int CountComponents(const std::vector<int>& vertices) const;

 private:
  int rows_;
  int cols_;
  std::vector<std::vector<int>> adj_;
};

GameGraph BuildGraph(const BimatrixGame& game);
int MaxDegree(const GameGraph& g);

// A vertex set of the graph together with its component structure.
struct SubgraphCandidate {
  std::vector<int> vertices;   // sorted global vertex ids
  int components = 0;
  std::vector<int> component;  // component[k] is the component of vertices[k]

  std::vector<int> RowIndices(const GameGraph& g) const;
  std::vector<int> ColIndices(const GameGraph& g) const;
};

struct EnumerationStats {
  std::int64_t leaves = 0;      // leaves of the branching tree
  std::int64_t emitted = 0;     // distinct candidates passed to the visitor
  std::int64_t duplicates = 0;  // candidates suppressed by deduplication
};

// Return false to stop the enumeration.
using SubgraphVisitor = std::function<bool(const SubgraphCandidate&)>;

// Active/passive branching enumeration of every vertex set of size t whose
// induced subgraph has exactly c connected components. Each step takes the
// least recently activated vertex and either selects one of its neighbours
// (making it active) or sets it passive; when no vertex is active a new
// component is started at an unused vertex. Output is deterministic and
// duplicate free.
//
// The branching rules already reach every vertex set along a single branch;
// with deduplicate set, emitted sets are additionally checked against a hash
// set of everything emitted so far, at O(output) memory.
EnumerationStats EnumerateSubgraphs(const GameGraph& g, int t, int c,
                                    const SubgraphVisitor& visit,
                                    bool deduplicate = true);

std::vector<SubgraphCandidate> CollectSubgraphs(const GameGraph& g, int t,
                                                int c);

// Number of branching-tree leaves visited by EnumerateSubgraphs(g, t, c).
std::int64_t BranchCount(const GameGraph& g, int t, int c);

}  // namespace nashfpt

#endif  // NASHFPT_GAME_GRAPH_H_
