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
#ifndef NASHFPT_LP_H_
#define NASHFPT_LP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashfpt/matrix.h"
#include "nashfpt/rational.h"

namespace nashfpt {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  Vector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective . x subject to the constraints; variable j is bounded
// below by lower_bounds[j] when present, and free otherwise.
struct LinearProgram {
  Vector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;

  // Empty program over num_vars variables, all bounded below by zero.
  static LinearProgram NonNegative(std::size_t num_vars);

  std::size_t NumVars() const { return objective.size(); }
  void Add(Vector coeffs, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<Vector> solution;
  std::optional<Rational> value;
  std::int64_t pivots = 0;
};

// Two-phase primal simplex over exact rationals using Bland's rule for both
// the entering and the leaving variable. Returns a basic optimal solution.
// Throws std::invalid_argument when constraint widths or the bound vector do
// not match the objective.
LpOutcome SolveLp(const LinearProgram& lp);

// True iff x satisfies every constraint and bound of lp exactly.
bool IsFeasiblePoint(const LinearProgram& lp, const Vector& x);

}  // namespace nashfpt

#endif  // NASHFPT_LP_H_
