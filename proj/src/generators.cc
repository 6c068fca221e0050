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
#include "nashfpt/generators.h"

#include <limits>
#include <stdexcept>
#include <utility>

namespace nashfpt {
namespace {

using Pattern = std::vector<std::vector<int>>;  // columns per row

Pattern DrawPattern(int rows, int cols, int sparsity, Rng& rng) {
  Pattern pattern(rows);
  std::vector<int> col_count(cols, 0);
  for (int i = 0; i < rows; ++i) {
    std::vector<int> open;
    for (int j = 0; j < cols; ++j) {
      if (col_count[j] < sparsity) open.push_back(j);
    }
    const int take = std::min<int>(sparsity, static_cast<int>(open.size()));
    for (int s = 0; s < take; ++s) {
      const int pick = s + rng.UniformInt(static_cast<int>(open.size()) - s);
      std::swap(open[s], open[pick]);
      pattern[i].push_back(open[s]);
      ++col_count[open[s]];
    }
  }
  return pattern;
}

Matrix FillPattern(int rows, int cols, const Pattern& pattern,
                   const std::vector<Rational>& nonzero, Rng& rng) {
  Matrix m(rows, cols);
  if (nonzero.empty()) return m;
  for (int i = 0; i < rows; ++i) {
    for (int j : pattern[i]) {
      m(i, j) = nonzero[rng.UniformInt(static_cast<int>(nonzero.size()))];
    }
  }
  return m;
}

}  // namespace

int Rng::UniformInt(int n) {
  if (n <= 0) throw std::invalid_argument("UniformInt needs n >= 1");
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw > limit);
  return static_cast<int>(draw % range);
}

bool Rng::Bernoulli(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::vector<Rational> DefaultSparseValues() { return {-2, -1, 0, 1, 2}; }

BimatrixGame GenSparse(int rows, int cols, int sparsity,
                       const std::vector<Rational>& values, std::uint64_t seed,
                       SparseGenOptions options) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty game");
  if (sparsity < 0 || sparsity > rows || sparsity > cols) {
    throw std::invalid_argument("sparsity must lie in [0, min(m, n)]");
  }
  std::vector<Rational> nonzero;
  for (const Rational& v : values) {
    if (!v.IsZero()) nonzero.push_back(v);
  }
  Rng rng(seed);
  const Pattern pa = DrawPattern(rows, cols, sparsity, rng);
  Matrix a = FillPattern(rows, cols, pa, nonzero, rng);
  const Pattern pb =
      options.shared_pattern ? pa : DrawPattern(rows, cols, sparsity, rng);
  Matrix b = FillPattern(rows, cols, pb, nonzero, rng);
  return BimatrixGame(std::move(a), std::move(b));
}

BimatrixGame GenSparse(int n, int sparsity, const std::vector<Rational>& values,
                       std::uint64_t seed, SparseGenOptions options) {
  return GenSparse(n, n, sparsity, values, seed, options);
}

BimatrixGame GenUnbalanced(int k, int n, int value_count, std::uint64_t seed) {
  if (k < 1 || n < 1) throw std::invalid_argument("empty game");
  if (value_count < 1) throw std::invalid_argument("need at least one value");
  Rng rng(seed);
  Matrix a(k, n), b(k, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rng.UniformInt(value_count);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = rng.UniformInt(value_count);
  }
  return BimatrixGame(std::move(a), std::move(b));
}

BimatrixGame GenWinLose(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("empty game");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  Rng rng(seed);
  Matrix a(n, n), b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rng.Bernoulli(density) ? 1 : 0;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = rng.Bernoulli(density) ? 1 : 0;
  }
  return BimatrixGame(std::move(a), std::move(b));
}

}  // namespace nashfpt
