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
#ifndef NASHFPT_GAME_H_
#define NASHFPT_GAME_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashfpt/matrix.h"
#include "nashfpt/rational.h"

namespace nashfpt {

// Two-player normal-form game: A holds the row player's payoffs and B the
// column player's, both m x n with m, n >= 1.
class BimatrixGame {
 public:
  BimatrixGame(Matrix a, Matrix b);

  const Matrix& A() const { return a_; }
  const Matrix& B() const { return b_; }
  int rows() const { return static_cast<int>(a_.rows()); }
  int cols() const { return static_cast<int>(a_.cols()); }

  bool NonNegative() const;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  Matrix a_;
  Matrix b_;
};

// Sorted index set.
using IndexSet = std::vector<int>;

struct Support {
  IndexSet rows;
  IndexSet cols;

  friend bool operator==(const Support&, const Support&) = default;
  friend auto operator<=>(const Support&, const Support&) = default;
};

std::string ToString(const Support& s);

// Pair of probability vectors. The constructor enforces non-negativity and
// exact unit sums.
class MixedProfile {
 public:
  MixedProfile(Vector x, Vector y);

  static MixedProfile Pure(int rows, int cols, int row, int col);

  const Vector& x() const { return x_; }
  const Vector& y() const { return y_; }

  Support support() const;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  Vector x_;
  Vector y_;
};

// Indices of strictly positive coordinates.
IndexSet SupportOf(const Vector& v);

// (x^T A y, x^T B y).
std::pair<Rational, Rational> Payoffs(const BimatrixGame& game,
                                      const MixedProfile& p);

enum class Player { kRow, kColumn };

struct Violation {
  Player player = Player::kRow;
  int played = 0;   // index s in the player's support
  int better = 0;   // index j with a strictly higher payoff than s
  Rational played_payoff;
  Rational better_payoff;
};

struct Verdict {
  std::optional<Violation> violation;
  bool IsEquilibrium() const { return !violation.has_value(); }
};

// Exact best-response check: every played strategy must earn a maximal
// payoff against the opponent's mixed strategy. On failure reports the first
// (s, j) pair in row-major scan order, row player before column player.
Verdict VerifyEquilibrium(const BimatrixGame& game, const MixedProfile& p);

// (max_i (Ay)_i - x^T A y, max_j (x^T B)_j - x^T B y).
std::pair<Rational, Rational> BestResponseGap(const BimatrixGame& game,
                                              const MixedProfile& p);

void CheckDimensions(const BimatrixGame& game, const MixedProfile& p);

}  // namespace nashfpt

#endif  // NASHFPT_GAME_H_
