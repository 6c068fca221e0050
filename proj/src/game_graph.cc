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
#include "nashfpt/game_graph.h"

#include <algorithm>
#include <unordered_set>
#include <stdexcept>

namespace nashfpt {

GameGraph::GameGraph(int rows, int cols)
    : rows_(rows), cols_(cols), adj_(rows + cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative graph size");
}

GameGraph::GameGraph(const BimatrixGame& game)
    : GameGraph(game.rows(), game.cols()) {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (!game.A()(i, j).IsZero() || !game.B()(i, j).IsZero()) {
        adj_[i].push_back(rows_ + j);
        adj_[rows_ + j].push_back(i);
      }
    }
  }
}

void GameGraph::AddEdge(int i, int j) {
  if (HasEdge(i, j)) return;
  auto insert = [](std::vector<int>& list, int v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  };
  insert(adj_[i], rows_ + j);
  insert(adj_[rows_ + j], i);
}

bool GameGraph::HasEdge(int i, int j) const {
  const auto& list = adj_.at(i);
  return std::binary_search(list.begin(), list.end(), rows_ + j);
}

std::int64_t GameGraph::NumEdges() const {
  std::int64_t e = 0;
  for (int i = 0; i < rows_; ++i) e += Degree(i);
  return e;
}

std::vector<std::pair<int, int>> GameGraph::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rows_; ++i) {
    for (int v : adj_[i]) out.emplace_back(i, v - rows_);
  }
  return out;
}

int GameGraph::CountComponents(const std::vector<int>& vertices) const {
  std::vector<char> in(NumVertices(), 0), seen(NumVertices(), 0);
  for (int v : vertices) in[v] = 1;
  int components = 0;
  std::vector<int> stack;
  for (int s : vertices) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

GameGraph BuildGraph(const BimatrixGame& game) { return GameGraph(game); }

int MaxDegree(const GameGraph& g) {
  int best = 0;
  for (int v = 0; v < g.NumVertices(); ++v) best = std::max(best, g.Degree(v));
  return best;
}

std::vector<int> SubgraphCandidate::RowIndices(const GameGraph& g) const {
  std::vector<int> out;
  for (int v : vertices) {
    if (g.IsRow(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> SubgraphCandidate::ColIndices(const GameGraph& g) const {
  std::vector<int> out;
  for (int v : vertices) {
    if (!g.IsRow(v)) out.push_back(g.Index(v));
  }
  return out;
}

namespace {

struct VertexSetHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Branching state. Active vertices form a FIFO (queue_[head_..]); a vertex
// leaves the queue when it is set passive, at which point its unselected
// neighbours are excluded from the current and all later components. Within
// one active vertex, neighbours are selected in increasing order and every
// vertex of a component has a larger id than the component's start vertex.
// Together these rules make each vertex set reachable along one branch only.
class Brancher {
 public:
  Brancher(const GameGraph& g, int t, int c, const SubgraphVisitor& visit,
           bool deduplicate)
      : g_(g), t_(t), c_(c), visit_(visit), deduplicate_(deduplicate),
        selected_(g.NumVertices(), 0),
        excluded_(g.NumVertices(), 0), component_of_(g.NumVertices(), -1),
        last_pick_(g.NumVertices(), -1) {}

  EnumerationStats Run() {
    if (t_ >= 1 && c_ >= 1 && t_ <= g_.NumVertices()) Branch();
    return stats_;
  }

 private:
  void Leaf() { ++stats_.leaves; }

  void Emit() {
    SubgraphCandidate cand;
    cand.vertices = chosen_;
    std::sort(cand.vertices.begin(), cand.vertices.end());
    if (deduplicate_ && !seen_.insert(cand.vertices).second) {
      ++stats_.duplicates;
      return;
    }
    cand.components = components_;
    cand.component.reserve(cand.vertices.size());
    for (int v : cand.vertices) cand.component.push_back(component_of_[v]);
    ++stats_.emitted;
    if (!visit_(cand)) stopped_ = true;
  }

  void Select(int v) {
    selected_[v] = 1;
    chosen_.push_back(v);
    component_of_[v] = components_ - 1;
    queue_.push_back(v);
    last_pick_[v] = -1;
  }

  void Unselect(int v) {
    selected_[v] = 0;
    chosen_.pop_back();
    component_of_[v] = -1;
    queue_.pop_back();
  }

  void Branch() {
    if (stopped_) return;
    if (static_cast<int>(chosen_.size()) == t_) {
      Leaf();
      if (components_ == c_) Emit();
      return;
    }
    if (head_ == queue_.size()) {
      if (components_ == c_) {
        Leaf();
        return;
      }
      const int first = components_ == 0 ? 0 : starts_.back() + 1;
      bool branched = false;
      for (int s = first; s < g_.NumVertices() && !stopped_; ++s) {
        if (selected_[s] || excluded_[s]) continue;
        branched = true;
        ++components_;
        starts_.push_back(s);
        Select(s);
        Branch();
        Unselect(s);
        starts_.pop_back();
        --components_;
      }
      if (!branched) Leaf();
      return;
    }

    const int v = queue_[head_];
    const int start = starts_.back();
    const int saved_last = last_pick_[v];
    for (int w : g_.Neighbors(v)) {
      if (stopped_) return;
      if (w <= saved_last || w <= start || selected_[w] || excluded_[w]) {
        continue;
      }
      last_pick_[v] = w;
      Select(w);
      Branch();
      Unselect(w);
      last_pick_[v] = saved_last;
    }
    if (stopped_) return;
    // Event: set v passive.
    for (int w : g_.Neighbors(v)) {
      if (!selected_[w]) ++excluded_[w];
    }
    ++head_;
    Branch();
    --head_;
    for (int w : g_.Neighbors(v)) {
      if (!selected_[w]) --excluded_[w];
    }
  }

  const GameGraph& g_;
  const int t_;
  const int c_;
  const SubgraphVisitor& visit_;
  const bool deduplicate_;
  std::vector<char> selected_;
  std::vector<int> excluded_;
  std::vector<int> component_of_;
  std::vector<int> last_pick_;
  std::vector<int> chosen_;
  std::vector<int> queue_;
  std::size_t head_ = 0;
  std::vector<int> starts_;
  int components_ = 0;
  bool stopped_ = false;
  std::unordered_set<std::vector<int>, VertexSetHash> seen_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats EnumerateSubgraphs(const GameGraph& g, int t, int c,
                                    const SubgraphVisitor& visit,
                                    bool deduplicate) {
  return Brancher(g, t, c, visit, deduplicate).Run();
}

std::vector<SubgraphCandidate> CollectSubgraphs(const GameGraph& g, int t,
                                                int c) {
  std::vector<SubgraphCandidate> out;
  EnumerateSubgraphs(g, t, c, [&](const SubgraphCandidate& cand) {
    out.push_back(cand);
    return true;
  });
  return out;
}

std::int64_t BranchCount(const GameGraph& g, int t, int c) {
  return EnumerateSubgraphs(g, t, c, [](const SubgraphCandidate&) {
           return true;
         }).leaves;
}

}  // namespace nashfpt
