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
#ifndef NASHFPT_GENERATORS_H_
#define NASHFPT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "nashfpt/game.h"

namespace nashfpt {

// Seeded random source with a fully specified output sequence: raw draws
// come from std::mt19937_64 (whose sequence the C++ standard fixes), and
// UniformInt(n) rejects draws >= 2^64 - (2^64 mod n) before reducing mod n.
// Bernoulli(p) compares (draw >> 11) * 2^-53 against p.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  int UniformInt(int n);
  bool Bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

struct SparseGenOptions {
  // Place the non-zeros of A and B on one common pattern, so the game graph
  // has maximum degree <= l. Otherwise each matrix gets its own pattern.
  bool shared_pattern = true;
};

// m x n game with at most l non-zeros per row and per column of each matrix.
// Rows are filled in order, each choosing up to l distinct columns among
// those still below l entries; every placed entry draws a value uniformly
// from the non-zero members of values. Throws std::invalid_argument if l is
// negative or exceeds n or m.
BimatrixGame GenSparse(int rows, int cols, int sparsity,
                       const std::vector<Rational>& values, std::uint64_t seed,
                       SparseGenOptions options = {});
BimatrixGame GenSparse(int n, int sparsity, const std::vector<Rational>& values,
                       std::uint64_t seed, SparseGenOptions options = {});

// {-2, -1, 0, 1, 2}.
std::vector<Rational> DefaultSparseValues();

// k x n non-negative game, entries of A and B uniform on {0..l-1}.
BimatrixGame GenUnbalanced(int k, int n, int value_count, std::uint64_t seed);

// n x n game over {0, 1}; each entry is 1 with the given probability.
BimatrixGame GenWinLose(int n, double density, std::uint64_t seed);

}  // namespace nashfpt

#endif  // NASHFPT_GENERATORS_H_
