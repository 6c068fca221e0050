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
#ifndef NASHFPT_UNBALANCED_SOLVER_H_
#define NASHFPT_UNBALANCED_SOLVER_H_

#include <cstdint>
#include <vector>

#include "nashfpt/game.h"
#include "nashfpt/stats.h"

namespace nashfpt {

// Non-negative k x n game; value_count is the number of distinct entries of A.
class UnbalancedInstance {
 public:
  explicit UnbalancedInstance(BimatrixGame game);

  const BimatrixGame& game() const { return game_; }
  int k() const { return game_.rows(); }
  int value_count() const { return value_count_; }

 private:
  BimatrixGame game_;
  int value_count_;
};

// Partition of the columns by equality of A(*, j).
struct ColumnClasses {
  std::vector<std::vector<int>> members;  // sorted, classes ordered by rep
  std::vector<int> representative;        // minimum index of each class
  std::vector<int> class_of;              // column -> class

  int size() const { return static_cast<int>(members.size()); }
};

ColumnClasses ComputeColumnClasses(const Matrix& a);
ColumnClasses ComputeColumnClasses(const UnbalancedInstance& inst);

// Upper bound on the (row support, class set) guesses: (2^k - 1) times the
// number of class subsets of size 1..k+1.
std::int64_t UnbalancedGuessBound(int k, int classes);

struct UnbalancedResult {
  MixedProfile profile;
  std::int64_t guesses = 0;
};

// Guesses a row support and at most k + 1 column classes, then one column of
// each chosen class, and solves the support LP on the original game. Always
// returns a verified equilibrium; throws std::logic_error if the sweep is
// exhausted.
UnbalancedResult UnbalancedSolve(const UnbalancedInstance& inst,
                                 SolveStats* stats = nullptr);

// y with the mass of column from moved onto column to.
Vector MergeColumns(const Vector& y, int to, int from);

}  // namespace nashfpt

#endif  // NASHFPT_UNBALANCED_SOLVER_H_
