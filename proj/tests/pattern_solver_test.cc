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
#include "nashfpt/pattern_solver.h"
#include "test_util.h"

namespace nashfpt {
namespace {

using testing::Vec;

const Rational kHalf(1, 2);

ValueAlphabet Alphabet(std::vector<Rational> values) {
  return ValueAlphabet{std::move(values)};
}

TEST_CASE("enumerate_patterns emits alphabet^(2 rows cols) pairs") {
  const auto noop = [](const EquilibriumPattern&) { return true; };
  CHECK(EnumeratePatterns(Alphabet({0, 1}), 1, 1, noop) == 4);
  CHECK(EnumeratePatterns(Alphabet({7}), 2, 2, noop) == 1);
  CHECK(EnumeratePatterns(Alphabet({0, 1}), 2, 2, noop) == 256);
  CHECK(EnumeratePatterns(Alphabet({0, 1, 2}), 1, 2, noop) == 81);

  std::set<std::pair<std::vector<Rational>, std::vector<Rational>>> seen;
  EnumeratePatterns(Alphabet({0, 1}), 2, 2, [&](const EquilibriumPattern& p) {
    seen.insert({p.a.data(), p.b.data()});
    return true;
  });
  CHECK(seen.size() == 256);
}

TEST_CASE("alphabet of a game") {
  const ValueAlphabet a = AlphabetOf(testing::MatchingPennies());
  CHECK(a.values == std::vector<Rational>{-1, 1});
  CHECK(a.Contains(1));
  CHECK_FALSE(a.Contains(0));
}

TEST_CASE("augmented game layout") {
  EquilibriumPattern p{Matrix{{1}}, Matrix{{2}}};
  const BimatrixGame g = BuildAugmentedGame(p, {Vec({3})}, {Vec({4})});
  CHECK(g.A() == Matrix{{1, 0}, {3, 0}});
  CHECK(g.B() == Matrix{{2, 4}, {0, 0}});
}

TEST_CASE("certify_pattern") {
  EquilibriumPattern identity{Matrix::Identity(2), Matrix::Identity(2)};
  std::optional<MixedProfile> p = CertifyPattern(identity, {}, {});
  REQUIRE(p.has_value());
  CHECK(p->x() == Vec({kHalf, kHalf}));
  CHECK(p->y() == Vec({kHalf, kHalf}));

  EquilibriumPattern one{Matrix{{1}}, Matrix{{1}}};
  std::optional<MixedProfile> pure = CertifyPattern(one, {}, {});
  REQUIRE(pure.has_value());
  CHECK(*pure == MixedProfile::Pure(1, 1, 0, 0));

  EquilibriumPattern zeros{Matrix(2, 2), Matrix(2, 2)};
  CHECK(CertifyPattern(zeros, {}, {}).has_value());
  CHECK_FALSE(CertifyPattern(zeros, {Vec({1, 1})}, {}).has_value());
}

TEST_CASE("find_occurrence") {
  EquilibriumPattern identity{Matrix::Identity(2), Matrix::Identity(2)};
  std::optional<Occurrence> occ =
      FindOccurrence(testing::Coordination(), identity, {});
  REQUIRE(occ.has_value());
  CHECK(*occ == Occurrence{{0, 1}, {0, 1}});

  Matrix ones{{1, 1}, {1, 1}};
  EquilibriumPattern zeros{Matrix(1, 1), Matrix(1, 1)};
  CHECK_FALSE(FindOccurrence(BimatrixGame(ones, ones), zeros, {}).has_value());

  // Identity plus a row that wins against both pattern columns.
  Matrix a{{1, 0}, {0, 1}, {1, 1}};
  const BimatrixGame g(a, a);
  CHECK(FindOccurrence(g, identity, {}).has_value());
  CHECK_FALSE(
      FindOccurrence(g, identity, {.rows = {Vec({1, 1})}, .cols = {}})
          .has_value());
}

TEST_CASE("all_occurrences matches brute force") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const BimatrixGame g = GenWinLose(4, 0.5, trial);
    EquilibriumPattern p{testing::RandomMatrix(rng, 2, 2, 0, 1),
                         testing::RandomMatrix(rng, 2, 2, 0, 1)};
    std::set<std::pair<IndexSet, IndexSet>> expected;
    for (int r0 = 0; r0 < 4; ++r0) {
      for (int r1 = 0; r1 < 4; ++r1) {
        for (int c0 = 0; c0 < 4; ++c0) {
          for (int c1 = 0; c1 < 4; ++c1) {
            if (r0 == r1 || c0 == c1) continue;
            const IndexSet rows{r0, r1}, cols{c0, c1};
            if (g.A().Sub(rows, cols) == p.a && g.B().Sub(rows, cols) == p.b) {
              expected.insert({rows, cols});
            }
          }
        }
      }
    }
    std::set<std::pair<IndexSet, IndexSet>> found;
    for (const Occurrence& o : AllOccurrences(g, p)) {
      CHECK(found.insert({o.rows, o.cols}).second);
    }
    CHECK(found == expected);
  }
}

TEST_CASE("pattern_solve examples") {
  std::optional<PatternResult> w = PatternSolve(testing::CyclicWinLose(), 2);
  REQUIRE(w.has_value());
  CHECK(w->profile.x() == Vec({kHalf, kHalf}));
  CHECK(w->profile.y() == Vec({kHalf, kHalf}));

  std::optional<PatternResult> c = PatternSolve(testing::Coordination(), 1);
  REQUIRE(c.has_value());
  CHECK(c->profile.support().rows.size() == 1);

  CHECK_FALSE(PatternSolve(testing::MatchingPennies(), 1).has_value());
  std::optional<PatternResult> mp = PatternSolve(testing::MatchingPennies(), 2);
  REQUIRE(mp.has_value());
  CHECK(VerifyEquilibrium(testing::MatchingPennies(), mp->profile)
            .IsEquilibrium());
}

TEST_CASE("pattern_solve agrees with the oracle on small win-lose games") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const BimatrixGame g = GenWinLose(n, 0.4, seed);
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(seed);
      CAPTURE(k);
      std::optional<PatternResult> r = PatternSolve(g, k);
      CHECK(r.has_value() == !OracleFind(g, k).empty());
      if (r) CHECK(VerifyEquilibrium(g, r->profile).IsEquilibrium());
    }
  }
}

}  // namespace
}  // namespace nashfpt
