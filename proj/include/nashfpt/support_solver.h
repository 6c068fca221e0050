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
#ifndef NASHFPT_SUPPORT_SOLVER_H_
#define NASHFPT_SUPPORT_SOLVER_H_

#include <cstdint>
#include <functional>
#include <optional>

#include "nashfpt/game.h"
#include "nashfpt/stats.h"

namespace nashfpt {

enum class SupportMode {
  // S(x) = I and S(y) = J.
  kExact,
  // S(x) subset of I and S(y) subset of J, with every strategy of I and J
  // still a best reply (the decoupled LP without positivity).
  kWithin,
};

struct SupportQuery {
  IndexSet rows;  // I
  IndexSet cols;  // J
  SupportMode mode = SupportMode::kExact;
};

// Finds y supported on J such that every row in I attains max_i (Ay)_i, i.e.
// the row player is indifferent over I and has no better reply. Depends only
// on A. Returns the full-length y (zeros off J).
std::optional<Vector> SolveColumnMix(const Matrix& a, const IndexSet& rows,
                                     const IndexSet& cols, SupportMode mode,
                                     SolveStats* stats = nullptr);

// The symmetric problem for x against B: x supported on I with every column
// in J attaining max_j (x^T B)_j. Depends only on B.
std::optional<Vector> SolveRowMix(const Matrix& b, const IndexSet& rows,
                                  const IndexSet& cols, SupportMode mode,
                                  SolveStats* stats = nullptr);

// Equilibrium with the given supports, or nullopt when none exists. Any
// returned profile satisfies VerifyEquilibrium exactly.
std::optional<MixedProfile> SolveOnSupport(const BimatrixGame& game,
                                           const SupportQuery& query,
                                           SolveStats* stats = nullptr);

// All (I, J) with |I| = k1 and |J| = k2 in lexicographic order. The visitor
// returns false to stop.
void EnumerateAllSupports(int rows, int cols, int k1, int k2,
                          const std::function<bool(const Support&)>& visit);
std::vector<Support> AllSupports(int rows, int cols, int k1, int k2);

// Support enumeration over every (k1, k2) up to max_support, smallest sizes
// first; returns the first exact-support equilibrium.
std::optional<MixedProfile> BaselineSolve(const BimatrixGame& game,
                                          int max_support,
                                          SolveStats* stats = nullptr);

// Number of support queries BaselineSolve issues when no equilibrium is
// found: sum over k1, k2 <= k of C(m, k1) * C(n, k2). Saturates.
std::int64_t BaselineQueryCount(int rows, int cols, int max_support);

}  // namespace nashfpt

#endif  // NASHFPT_SUPPORT_SOLVER_H_
