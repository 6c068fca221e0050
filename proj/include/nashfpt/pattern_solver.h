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
#ifndef NASHFPT_PATTERN_SOLVER_H_
#define NASHFPT_PATTERN_SOLVER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nashfpt/game.h"
#include "nashfpt/stats.h"

namespace nashfpt {

// Sorted set of distinct payoff values occurring in A or B.
struct ValueAlphabet {
  std::vector<Rational> values;
  int size() const { return static_cast<int>(values.size()); }
  bool Contains(const Rational& v) const;
};

ValueAlphabet AlphabetOf(const BimatrixGame& game);

// Payoff submatrices expected at the supports of an equilibrium: a and b are
// both rows x cols over the alphabet.
struct EquilibriumPattern {
  Matrix a;
  Matrix b;

  int rows() const { return static_cast<int>(a.rows()); }
  int cols() const { return static_cast<int>(a.cols()); }

  friend bool operator==(const EquilibriumPattern&,
                         const EquilibriumPattern&) = default;
};

// Visits all |P|^(2 rows cols) patterns in lexicographic order of
// (a row-major, b row-major) digit strings. The visitor returns false to
// stop. Returns the number of patterns visited.
std::int64_t EnumeratePatterns(
    const ValueAlphabet& alphabet, int rows, int cols,
    const std::function<bool(const EquilibriumPattern&)>& visit);

// Every vector of the given length over the alphabet, lexicographic.
std::vector<Vector> AllVectors(const ValueAlphabet& alphabet, int length);

// C = [[A*, 0], [A+, 0]] and D = [[B*, B+], [0, 0]], where A+ are the extra
// rows (each of length cols) and B+ the extra columns (each of length rows).
BimatrixGame BuildAugmentedGame(const EquilibriumPattern& pattern,
                                const std::vector<Vector>& extra_rows,
                                const std::vector<Vector>& extra_cols);

// Equilibrium of the augmented game with S(x) = [rows] and S(y) = [cols].
std::optional<MixedProfile> CertifyPattern(
    const EquilibriumPattern& pattern, const std::vector<Vector>& extra_rows,
    const std::vector<Vector>& extra_cols, SolveStats* stats = nullptr);

struct ForbiddenSets {
  std::vector<Vector> rows;  // F1: forbidden A(i, J) restrictions
  std::vector<Vector> cols;  // F2: forbidden B(I, j) restrictions
};

// Ordered index tuples with A(I, J) = a and B(I, J) = b.
struct Occurrence {
  IndexSet rows;
  IndexSet cols;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Backtracking search for an occurrence of the pattern such that no row i of
// the game has A(i, J) in F1 and no column j has B(I, j) in F2. Columns are
// placed first, pruned by the (A, B) value pairs each column contains.
std::optional<Occurrence> FindOccurrence(const BimatrixGame& game,
                                         const EquilibriumPattern& pattern,
                                         const ForbiddenSets& forbidden);

// All occurrences, ignoring forbidden sets, in search order.
std::vector<Occurrence> AllOccurrences(const BimatrixGame& game,
                                       const EquilibriumPattern& pattern);

struct PatternResult {
  MixedProfile profile;
  EquilibriumPattern pattern;
  Occurrence occurrence;
  std::vector<Vector> extra_rows;
  std::vector<Vector> extra_cols;
};

// For support sizes up to k (smallest first), every pattern, and every
// choice of extra rows/columns not already in the pattern: certify on the
// augmented game, look for an occurrence avoiding the forbidden sets, lift
// the certified profile and re-verify it on the game. Throws
// std::logic_error if a lifted profile fails verification, and
// std::invalid_argument if an extra-row/column universe has more than 20
// vectors.
std::optional<PatternResult> PatternSolve(const BimatrixGame& game, int k,
                                          SolveStats* stats = nullptr);

}  // namespace nashfpt

#endif  // NASHFPT_PATTERN_SOLVER_H_
