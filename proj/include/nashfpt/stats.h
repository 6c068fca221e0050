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
#ifndef NASHFPT_STATS_H_
#define NASHFPT_STATS_H_

#include <cstdint>

namespace nashfpt {

// Work counters reported by the solvers and the bench harness.
struct SolveStats {
  std::int64_t lp_calls = 0;        // support queries decided
  std::int64_t lp_solves = 0;       // simplex runs actually executed
  std::int64_t candidates = 0;      // subgraphs / patterns / guesses examined
  std::int64_t branch_leaves = 0;   // branching-tree leaves (sparse solvers)

  SolveStats& operator+=(const SolveStats& o) {
    lp_calls += o.lp_calls;
    lp_solves += o.lp_solves;
    candidates += o.candidates;
    branch_leaves += o.branch_leaves;
    return *this;
  }
};

}  // namespace nashfpt

#endif  // NASHFPT_STATS_H_
