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

#include <set>

#include "doctest.h"
#include "nashfpt/oracle.h"
#include "nashfpt/unbalanced_solver.h"
#include "test_util.h"

namespace nashfpt {
namespace {

using testing::Vec;

const Rational kHalf(1, 2);

TEST_CASE("column classes") {
  Matrix same{{1, 1, 1}, {2, 2, 2}};
  CHECK(ComputeColumnClasses(same).size() == 1);
  Matrix distinct{{1, 2, 3}, {0, 0, 0}};
  ColumnClasses c = ComputeColumnClasses(distinct);
  CHECK(c.size() == 3);
  Matrix mixed{{1, 0, 1, 0}, {0, 2, 0, 2}};
  c = ComputeColumnClasses(mixed);
  CHECK(c.size() == 2);
  CHECK(c.members[0] == std::vector<int>{0, 2});
  CHECK(c.members[1] == std::vector<int>{1, 3});
  CHECK(c.representative == std::vector<int>{0, 1});
  CHECK(c.class_of == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("class count is at most value_count^k") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const int ell = 1 + static_cast<int>(seed / 3 % 3);
    UnbalancedInstance inst(GenUnbalanced(k, 12, ell, seed));
    int bound = 1;
    for (int i = 0; i < k; ++i) bound *= inst.value_count();
    CHECK(ComputeColumnClasses(inst).size() <= bound);
  }
}

TEST_CASE("unbalanced instance requires non-negative payoffs") {
  CHECK_THROWS_AS(UnbalancedInstance(testing::MatchingPennies()),
                  std::invalid_argument);
}

TEST_CASE("single row: the column plays a best reply") {
  const BimatrixGame g(Matrix{{3, 1, 4}}, Matrix{{1, 5, 2}});
  UnbalancedResult r = UnbalancedSolve(UnbalancedInstance(g));
  CHECK(r.profile == MixedProfile::Pure(1, 3, 0, 1));
}

TEST_CASE("representative-equivalent column with a better B entry") {
  // Both columns share A's class; only column 1 is a best reply in B, so the
  // solver must look past the representative.
  const BimatrixGame g(Matrix{{1, 1}}, Matrix{{0, 5}});
  UnbalancedResult r = UnbalancedSolve(UnbalancedInstance(g));
  CHECK(r.profile == MixedProfile::Pure(1, 2, 0, 1));
  CHECK(VerifyEquilibrium(g, r.profile).IsEquilibrium());
}

TEST_CASE("duplicate columns: representatives suffice") {
  Matrix a{{3, 1, 3, 1}, {0, 2, 0, 2}};
  const BimatrixGame g(a, a);
  UnbalancedResult r = UnbalancedSolve(UnbalancedInstance(g));
  CHECK(VerifyEquilibrium(g, r.profile).IsEquilibrium());
  for (int j : r.profile.support().cols) CHECK(j < 2);
}

TEST_CASE("padded pennies: mixed equilibrium on two representatives") {
  const BimatrixGame g(Matrix{{2, 0, 2, 0}, {0, 2, 0, 2}},
                       Matrix{{0, 2, 0, 2}, {2, 0, 2, 0}});
  UnbalancedResult r = UnbalancedSolve(UnbalancedInstance(g));
  CHECK(r.profile.x() == Vec({kHalf, kHalf}));
  CHECK(r.profile.y() == Vec({kHalf, kHalf, 0, 0}));
}

TEST_CASE("random unbalanced games") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const int ell = 1 + static_cast<int>(seed / 3 % 3);
    const int n = 2 + static_cast<int>(seed % 7);
    UnbalancedInstance inst(GenUnbalanced(k, n, ell, seed));
    SolveStats stats;
    UnbalancedResult r = UnbalancedSolve(inst, &stats);
    CAPTURE(seed);
    CHECK(VerifyEquilibrium(inst.game(), r.profile).IsEquilibrium());
    const ColumnClasses classes = ComputeColumnClasses(inst);
    const IndexSet cols = r.profile.support().cols;
    CHECK(cols.size() <= static_cast<std::size_t>(k + 1));
    std::set<int> used;
    for (int j : cols) CHECK(used.insert(classes.class_of[j]).second);
    CHECK(r.guesses <= UnbalancedGuessBound(k, classes.size()));
  }
}

TEST_CASE("merging equivalent columns preserves Ay and equilibrium") {
  int merged = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const BimatrixGame g = GenUnbalanced(2, 5, 2, seed);
    const ColumnClasses classes = ComputeColumnClasses(g.A());
    for (const OracleHit& h : OracleFind(g, 3)) {
      const IndexSet& cols = h.support.cols;
      for (std::size_t p = 0; p < cols.size(); ++p) {
        for (std::size_t q = p + 1; q < cols.size(); ++q) {
          if (classes.class_of[cols[p]] != classes.class_of[cols[q]]) continue;
          const Vector y = MergeColumns(h.profile.y(), cols[p], cols[q]);
          CHECK(g.A() * y == g.A() * h.profile.y());
          CHECK(VerifyEquilibrium(g, MixedProfile(h.profile.x(), y))
                    .IsEquilibrium());
          ++merged;
        }
      }
    }
  }
  CHECK(merged > 0);
}

}  // namespace
}  // namespace nashfpt
