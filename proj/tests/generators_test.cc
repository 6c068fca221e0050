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
#include "nashfpt/generators.h"
#include "nashfpt/sparse_solver.h"
#include "test_util.h"

namespace nashfpt {
namespace {

TEST_CASE("rng is deterministic and in range") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  std::vector<int> counts(6);
  for (int i = 0; i < 6000; ++i) {
    const int x = a.UniformInt(6);
    CHECK(x == b.UniformInt(6));
    differs |= x != c.UniformInt(6);
    REQUIRE(x >= 0);
    REQUIRE(x < 6);
    ++counts[x];
  }
  CHECK(differs);
  for (int n : counts) CHECK(n > 800);
  Rng d(1);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(d.Bernoulli(0.0));
    CHECK(d.Bernoulli(1.0));
  }
}

TEST_CASE("gen_sparse") {
  CHECK(ValidateSparsity(GenSparse(4, 1, DefaultSparseValues(), 0)) <= 1);
  CHECK(GenSparse(100, 3, DefaultSparseValues(), 5) ==
        GenSparse(100, 3, DefaultSparseValues(), 5));
  CHECK_FALSE(GenSparse(20, 3, DefaultSparseValues(), 5) ==
              GenSparse(20, 3, DefaultSparseValues(), 6));
  const BimatrixGame dense = GenSparse(5, 5, DefaultSparseValues(), 1);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) CHECK_FALSE(dense.A()(i, j).IsZero());
  }
  for (int ell = 1; ell <= 3; ++ell) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      for (bool shared : {true, false}) {
        const BimatrixGame g = GenSparse(9, 7, ell, DefaultSparseValues(), seed,
                                         {.shared_pattern = shared});
        CHECK(g.rows() == 9);
        CHECK(g.cols() == 7);
        CHECK(ValidateSparsity(g) <= ell);
        const int delta = MaxDegree(BuildGraph(g));
        CHECK(delta <= (shared ? ell : 2 * ell));
        for (const Rational& v : g.A().data()) {
          CHECK(v >= Rational(-2));
          CHECK(v <= Rational(2));
        }
      }
    }
  }
  // With no nonzero value on offer the pattern stays empty.
  CHECK(GenSparse(4, 1, {Rational(0)}, 0).A().IsZero());
  CHECK_THROWS_AS(GenSparse(4, 5, DefaultSparseValues(), 0),
                  std::invalid_argument);
}

TEST_CASE("gen_unbalanced") {
  const BimatrixGame g = GenUnbalanced(2, 10, 3, 7);
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 10);
  CHECK(g.NonNegative());
  const BimatrixGame two = GenUnbalanced(3, 20, 2, 1);
  std::set<Rational> values(two.A().data().begin(), two.A().data().end());
  CHECK(values.size() <= 2);
  CHECK(GenUnbalanced(2, 10, 3, 7) == g);
}

TEST_CASE("gen_winlose") {
  const BimatrixGame zero = GenWinLose(4, 0.0, 3);
  CHECK(zero.A().IsZero());
  CHECK(zero.B().IsZero());
  const BimatrixGame ones = GenWinLose(4, 1.0, 3);
  for (const Rational& v : ones.A().data()) CHECK(v == Rational(1));
  for (const Rational& v : ones.B().data()) CHECK(v == Rational(1));
  CHECK(GenWinLose(6, 0.3, 9) == GenWinLose(6, 0.3, 9));
  CHECK_THROWS_AS(GenWinLose(3, 1.5, 0), std::invalid_argument);
}

}  // namespace
}  // namespace nashfpt
