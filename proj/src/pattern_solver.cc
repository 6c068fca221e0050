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
#include "nashfpt/pattern_solver.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "nashfpt/combinatorics.h"
#include "nashfpt/support_solver.h"

namespace nashfpt {
namespace {

constexpr int kMaxExtraUniverse = 20;

using ValuePair = std::pair<Rational, Rational>;

Vector RowRestriction(const Matrix& m, int row, const IndexSet& cols) {
  Vector v(cols.size());
  for (std::size_t b = 0; b < cols.size(); ++b) v[b] = m(row, cols[b]);
  return v;
}

Vector ColRestriction(const Matrix& m, const IndexSet& rows, int col) {
  Vector v(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) v[a] = m(rows[a], col);
  return v;
}

Vector PatternRow(const Matrix& m, int a) {
  return Vector(m.Row(a).begin(), m.Row(a).end());
}

// Backtracking occurrence search shared by FindOccurrence and
// AllOccurrences. forbidden may be null.
class OccurrenceSearch {
 public:
  OccurrenceSearch(const BimatrixGame& game, const EquilibriumPattern& pattern,
                   const ForbiddenSets* forbidden)
      : game_(game), pattern_(pattern), column_pairs_(game.cols()) {
    for (int j = 0; j < game.cols(); ++j) {
      for (int i = 0; i < game.rows(); ++i) {
        column_pairs_[j].emplace(game.A()(i, j), game.B()(i, j));
      }
    }
    if (forbidden) {
      forbidden_rows_.insert(forbidden->rows.begin(), forbidden->rows.end());
      forbidden_cols_.insert(forbidden->cols.begin(), forbidden->cols.end());
    }
  }

  // fn(occurrence) returns false to stop.
  template <typename Fn>
  void Run(Fn&& fn) {
    if (pattern_.rows() > game_.rows() || pattern_.cols() > game_.cols()) return;
    std::vector<char> used(game_.cols(), 0);
    IndexSet cols;
    PlaceColumns(cols, used, fn);
  }

 private:
  bool ColumnFits(int j, int b) const {
    for (int a = 0; a < pattern_.rows(); ++a) {
      if (!column_pairs_[j].count({pattern_.a(a, b), pattern_.b(a, b)})) {
        return false;
      }
    }
    return true;
  }

  template <typename Fn>
  bool PlaceColumns(IndexSet& cols, std::vector<char>& used, Fn& fn) {
    const int b = static_cast<int>(cols.size());
    if (b == pattern_.cols()) return CompleteColumns(cols, fn);
    for (int j = 0; j < game_.cols(); ++j) {
      if (used[j] || !ColumnFits(j, b)) continue;
      used[j] = 1;
      cols.push_back(j);
      const bool go_on = PlaceColumns(cols, used, fn);
      cols.pop_back();
      used[j] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  template <typename Fn>
  bool CompleteColumns(const IndexSet& cols, Fn& fn) {
    // Rows usable at each pattern row position.
    std::vector<IndexSet> options(pattern_.rows());
    for (int i = 0; i < game_.rows(); ++i) {
      Vector ra = RowRestriction(game_.A(), i, cols);
      if (forbidden_rows_.count(ra)) return true;
      for (int a = 0; a < pattern_.rows(); ++a) {
        bool match = true;
        for (int b = 0; b < pattern_.cols() && match; ++b) {
          match = ra[b] == pattern_.a(a, b) &&
                  game_.B()(i, cols[b]) == pattern_.b(a, b);
        }
        if (match) options[a].push_back(i);
      }
    }
    for (const IndexSet& o : options) {
      if (o.empty()) return true;
    }
    std::vector<char> used(game_.rows(), 0);
    IndexSet rows;
    return PlaceRows(rows, used, options, cols, fn);
  }

  template <typename Fn>
  bool PlaceRows(IndexSet& rows, std::vector<char>& used,
                 const std::vector<IndexSet>& options, const IndexSet& cols,
                 Fn& fn) {
    const std::size_t a = rows.size();
    if (a == options.size()) {
      if (!forbidden_cols_.empty()) {
        for (int j = 0; j < game_.cols(); ++j) {
          if (forbidden_cols_.count(ColRestriction(game_.B(), rows, j))) {
            return true;
          }
        }
      }
      return fn(Occurrence{rows, cols});
    }
    for (int i : options[a]) {
      if (used[i]) continue;
      used[i] = 1;
      rows.push_back(i);
      const bool go_on = PlaceRows(rows, used, options, cols, fn);
      rows.pop_back();
      used[i] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  const BimatrixGame& game_;
  const EquilibriumPattern& pattern_;
  std::vector<std::set<ValuePair>> column_pairs_;
  std::set<Vector> forbidden_rows_;
  std::set<Vector> forbidden_cols_;
};

// Index of a vector in the lexicographic list AllVectors(alphabet, len).
std::size_t VectorIndex(const ValueAlphabet& alphabet, const Vector& v) {
  std::size_t index = 0;
  for (const Rational& x : v) {
    auto it = std::lower_bound(alphabet.values.begin(), alphabet.values.end(), x);
    if (it == alphabet.values.end() || *it != x) {
      throw std::invalid_argument("value " + x.ToString() +
                                  " is outside the alphabet");
    }
    index = index * alphabet.values.size() +
            static_cast<std::size_t>(it - alphabet.values.begin());
  }
  return index;
}

// Vectors of the universe not in the present set, and a map from
// universe index to position in that list (-1 when present).
struct ExtraUniverse {
  std::vector<Vector> vectors;
  std::vector<int> position;
};

ExtraUniverse MakeExtraUniverse(const ValueAlphabet& alphabet, int length,
                                const std::set<Vector>& present) {
  ExtraUniverse u;
  for (Vector& v : AllVectors(alphabet, length)) {
    if (present.count(v)) {
      u.position.push_back(-1);
    } else {
      u.position.push_back(static_cast<int>(u.vectors.size()));
      u.vectors.push_back(std::move(v));
    }
  }
  if (u.vectors.size() > kMaxExtraUniverse) {
    throw std::invalid_argument(
        "pattern solver: extra row/column universe too large (" +
        std::to_string(u.vectors.size()) + " vectors)");
  }
  return u;
}

std::vector<Vector> Select(const std::vector<Vector>& all, std::uint32_t mask) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask >> i & 1u) out.push_back(all[i]);
  }
  return out;
}

}  // namespace

bool ValueAlphabet::Contains(const Rational& v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

ValueAlphabet AlphabetOf(const BimatrixGame& game) {
  std::set<Rational> values(game.A().data().begin(), game.A().data().end());
  values.insert(game.B().data().begin(), game.B().data().end());
  return {std::vector<Rational>(values.begin(), values.end())};
}

std::int64_t EnumeratePatterns(
    const ValueAlphabet& alphabet, int rows, int cols,
    const std::function<bool(const EquilibriumPattern&)>& visit) {
  if (alphabet.size() == 0 || rows < 1 || cols < 1) return 0;
  const int cells = rows * cols;
  std::vector<int> digit(2 * cells, 0);
  std::int64_t count = 0;
  EquilibriumPattern p{Matrix(rows, cols), Matrix(rows, cols)};
  for (int d = 0; d < cells; ++d) {
    p.a(d / cols, d % cols) = alphabet.values[0];
    p.b(d / cols, d % cols) = alphabet.values[0];
  }
  while (true) {
    ++count;
    if (!visit(p)) return count;
    int d = 2 * cells - 1;
    while (d >= 0 && digit[d] == alphabet.size() - 1) {
      digit[d] = 0;
      Matrix& m = d < cells ? p.a : p.b;
      m((d % cells) / cols, (d % cells) % cols) = alphabet.values[0];
      --d;
    }
    if (d < 0) return count;
    ++digit[d];
    Matrix& m = d < cells ? p.a : p.b;
    m((d % cells) / cols, (d % cells) % cols) = alphabet.values[digit[d]];
  }
}

std::vector<Vector> AllVectors(const ValueAlphabet& alphabet, int length) {
  std::vector<Vector> out{Vector()};
  for (int pos = 0; pos < length; ++pos) {
    std::vector<Vector> next;
    for (const Vector& prefix : out) {
      for (const Rational& v : alphabet.values) {
        Vector w = prefix;
        w.push_back(v);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

BimatrixGame BuildAugmentedGame(const EquilibriumPattern& pattern,
                                const std::vector<Vector>& extra_rows,
                                const std::vector<Vector>& extra_cols) {
  const int k1 = pattern.rows();
  const int k2 = pattern.cols();
  const std::size_t rows = k1 + extra_rows.size();
  const std::size_t cols = k2 + extra_cols.size();
  Matrix c(rows, cols), d(rows, cols);
  for (int a = 0; a < k1; ++a) {
    for (int b = 0; b < k2; ++b) {
      c(a, b) = pattern.a(a, b);
      d(a, b) = pattern.b(a, b);
    }
  }
  for (std::size_t r = 0; r < extra_rows.size(); ++r) {
    if (static_cast<int>(extra_rows[r].size()) != k2) {
      throw std::invalid_argument("extra row length != pattern columns");
    }
    for (int b = 0; b < k2; ++b) c(k1 + r, b) = extra_rows[r][b];
  }
  for (std::size_t s = 0; s < extra_cols.size(); ++s) {
    if (static_cast<int>(extra_cols[s].size()) != k1) {
      throw std::invalid_argument("extra column length != pattern rows");
    }
    for (int a = 0; a < k1; ++a) d(a, k2 + s) = extra_cols[s][a];
  }
  return BimatrixGame(std::move(c), std::move(d));
}

std::optional<MixedProfile> CertifyPattern(
    const EquilibriumPattern& pattern, const std::vector<Vector>& extra_rows,
    const std::vector<Vector>& extra_cols, SolveStats* stats) {
  const BimatrixGame cd = BuildAugmentedGame(pattern, extra_rows, extra_cols);
  IndexSet rows(pattern.rows()), cols(pattern.cols());
  for (int a = 0; a < pattern.rows(); ++a) rows[a] = a;
  for (int b = 0; b < pattern.cols(); ++b) cols[b] = b;
  return SolveOnSupport(cd, {rows, cols, SupportMode::kExact}, stats);
}

std::optional<Occurrence> FindOccurrence(const BimatrixGame& game,
                                         const EquilibriumPattern& pattern,
                                         const ForbiddenSets& forbidden) {
  std::optional<Occurrence> found;
  OccurrenceSearch(game, pattern, &forbidden).Run([&](const Occurrence& o) {
    found = o;
    return false;
  });
  return found;
}

std::vector<Occurrence> AllOccurrences(const BimatrixGame& game,
                                       const EquilibriumPattern& pattern) {
  std::vector<Occurrence> out;
  OccurrenceSearch(game, pattern, nullptr).Run([&](const Occurrence& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

std::optional<PatternResult> PatternSolve(const BimatrixGame& game, int k,
                                          SolveStats* stats) {
  const ValueAlphabet alphabet = AlphabetOf(game);
  std::optional<PatternResult> result;

  for (auto [k1, k2] : SupportSizeOrder(std::min(k, game.rows()),
                                        std::min(k, game.cols()))) {
    EnumeratePatterns(alphabet, k1, k2, [&](const EquilibriumPattern& pat) {
      if (stats) ++stats->candidates;
      const std::vector<Occurrence> occurrences = AllOccurrences(game, pat);
      if (occurrences.empty()) return true;

      std::set<Vector> pattern_rows, pattern_cols;
      for (int a = 0; a < k1; ++a) pattern_rows.insert(PatternRow(pat.a, a));
      for (int b = 0; b < k2; ++b) pattern_cols.insert(pat.b.Column(b));
      const ExtraUniverse row_universe =
          MakeExtraUniverse(alphabet, k2, pattern_rows);
      const ExtraUniverse col_universe =
          MakeExtraUniverse(alphabet, k1, pattern_cols);

      // For each occurrence, the extra rows/columns it needs: everything the
      // game shows on J (resp. I) that is not already in the pattern. A
      // choice (A+, B+) admits the occurrence iff it contains both needs.
      std::set<std::pair<std::uint32_t, std::uint32_t>> needs;
      for (const Occurrence& o : occurrences) {
        std::uint32_t row_need = 0, col_need = 0;
        for (int i = 0; i < game.rows(); ++i) {
          int pos = row_universe.position[VectorIndex(
              alphabet, RowRestriction(game.A(), i, o.cols))];
          if (pos >= 0) row_need |= 1u << pos;
        }
        for (int j = 0; j < game.cols(); ++j) {
          int pos = col_universe.position[VectorIndex(
              alphabet, ColRestriction(game.B(), o.rows, j))];
          if (pos >= 0) col_need |= 1u << pos;
        }
        needs.emplace(row_need, col_need);
      }

      // The augmented game decouples: the row player's indifference depends
      // only on A* and A+, the column player's only on B* and B+.
      IndexSet rows(k1), cols(k2);
      for (int a = 0; a < k1; ++a) rows[a] = a;
      for (int b = 0; b < k2; ++b) cols[b] = b;
      std::map<std::uint32_t, bool> row_side, col_side;
      auto row_side_ok = [&](std::uint32_t mask) {
        auto it = row_side.find(mask);
        if (it != row_side.end()) return it->second;
        std::vector<Vector> extra = Select(row_universe.vectors, mask);
        Matrix c(k1 + extra.size(), k2);
        for (int a = 0; a < k1; ++a) {
          for (int b = 0; b < k2; ++b) c(a, b) = pat.a(a, b);
        }
        for (std::size_t r = 0; r < extra.size(); ++r) {
          for (int b = 0; b < k2; ++b) c(k1 + r, b) = extra[r][b];
        }
        bool ok = SolveColumnMix(c, rows, cols, SupportMode::kExact, stats)
                      .has_value();
        return row_side[mask] = ok;
      };
      auto col_side_ok = [&](std::uint32_t mask) {
        auto it = col_side.find(mask);
        if (it != col_side.end()) return it->second;
        std::vector<Vector> extra = Select(col_universe.vectors, mask);
        Matrix d(k1, k2 + extra.size());
        for (int a = 0; a < k1; ++a) {
          for (int b = 0; b < k2; ++b) d(a, b) = pat.b(a, b);
          for (std::size_t s = 0; s < extra.size(); ++s) {
            d(a, k2 + s) = extra[s][a];
          }
        }
        bool ok = SolveRowMix(d, rows, cols, SupportMode::kExact, stats)
                      .has_value();
        return col_side[mask] = ok;
      };

      const std::uint32_t row_choices = 1u << row_universe.vectors.size();
      const std::uint32_t col_choices = 1u << col_universe.vectors.size();
      for (std::uint32_t ra = 0; ra < row_choices; ++ra) {
        for (std::uint32_t cb = 0; cb < col_choices; ++cb) {
          bool admitted = false;
          for (const auto& [rn, cn] : needs) {
            if ((rn & ~ra) == 0 && (cn & ~cb) == 0) {
              admitted = true;
              break;
            }
          }
          if (!admitted) continue;
          if (stats) ++stats->lp_calls;
          if (!row_side_ok(ra) || !col_side_ok(cb)) continue;

          std::vector<Vector> extra_rows = Select(row_universe.vectors, ra);
          std::vector<Vector> extra_cols = Select(col_universe.vectors, cb);
          std::optional<MixedProfile> certified =
              CertifyPattern(pat, extra_rows, extra_cols);
          if (!certified) {
            throw std::logic_error("decoupled certification disagrees");
          }
          ForbiddenSets forbidden{
              Select(row_universe.vectors, (row_choices - 1) & ~ra),
              Select(col_universe.vectors, (col_choices - 1) & ~cb)};
          std::optional<Occurrence> occ = FindOccurrence(game, pat, forbidden);
          if (!occ) {
            throw std::logic_error("occurrence index disagrees with search");
          }
          Vector x(game.rows()), y(game.cols());
          for (int a = 0; a < k1; ++a) x[occ->rows[a]] = certified->x()[a];
          for (int b = 0; b < k2; ++b) y[occ->cols[b]] = certified->y()[b];
          MixedProfile lifted(std::move(x), std::move(y));
          if (!VerifyEquilibrium(game, lifted).IsEquilibrium()) {
            throw std::logic_error("lifted pattern profile fails verification");
          }
          result = PatternResult{std::move(lifted), pat, std::move(*occ),
                                 std::move(extra_rows), std::move(extra_cols)};
          return false;
        }
      }
      return true;
    });
    if (result) return result;
  }
  return std::nullopt;
}

}  // namespace nashfpt
