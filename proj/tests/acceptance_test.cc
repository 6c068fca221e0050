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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact; the only tolerances are the
// wall-clock budgets listed with each criterion.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "nashfpt/cli.h"
#include "nashfpt/combinatorics.h"
#include "nashfpt/game_io.h"
#include "nashfpt/oracle.h"
#include "nashfpt/pattern_solver.h"
#include "nashfpt/sparse_solver.h"
#include "nashfpt/support_solver.h"
#include "nashfpt/unbalanced_solver.h"
#include "test_util.h"

namespace nashfpt {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// ------------------------------------------------------------ criterion 1

Outcome Criterion1() {
  constexpr double kBudget = 120;
  Outcome o;
  const auto start = Clock::now();
  Rng rng(1);
  std::int64_t queries = 0, feasible = 0, lp_disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    const int m = 1 + rng.UniformInt(6), n = 1 + rng.UniformInt(6);
    const BimatrixGame g = testing::RandomGame(rng, m, n, -2, 2);
    std::set<Support> oracle;
    for (const OracleHit& h : OracleFind(g, 3)) oracle.insert(h.support);
    std::set<Support> baseline;
    const Matrix bt = g.B().Transpose();
    for (int k1 = 1; k1 <= std::min(m, 3); ++k1) {
      for (int k2 = 1; k2 <= std::min(n, 3); ++k2) {
        EnumerateAllSupports(m, n, k1, k2, [&](const Support& s) {
          ++queries;
          const std::optional<MixedProfile> p =
              SolveOnSupport(g, {s.rows, s.cols});
          // Independent reference: one LP per side, no shortcuts.
          const bool reference =
              testing::ColumnMixFeasibleByLp(g.A(), s.rows, s.cols,
                                             SupportMode::kExact) &&
              testing::ColumnMixFeasibleByLp(bt, s.cols, s.rows,
                                             SupportMode::kExact);
          if (reference != p.has_value()) ++lp_disagreements;
          if (p) {
            baseline.insert(s);
            o.Require(VerifyEquilibrium(g, *p).IsEquilibrium() &&
                          p->support() == s,
                      "profile on " + ToString(s) + " fails verification");
          }
          return true;
        });
      }
    }
    feasible += static_cast<std::int64_t>(baseline.size());
    o.Require(baseline == oracle,
              "support sets differ on game " + std::to_string(i));
  }
  const double secs = Seconds(start);
  o.Require(lp_disagreements == 0, "single-LP reference disagrees");
  o.Require(secs < kBudget, "over time budget");
  o.detail << "200 games, " << queries << " support queries, " << feasible
           << " feasible pairs, " << lp_disagreements
           << " disagreements with the single-LP reference, " << secs
           << " s (budget " << kBudget << " s)";
  return o;
}

// ------------------------------------------------------ criteria 2, 3, 4

struct SparseCase {
  int ell;
  int k;
  BimatrixGame game;
};

std::vector<SparseCase> SparseCases(const std::vector<Rational>& values,
                                    std::uint64_t seed_base) {
  std::vector<SparseCase> out;
  for (int i = 0; i < 200; ++i) {
    const int ell = 1 + i % 3;
    const int k = 1 + (i / 3) % 3;
    out.push_back({ell, k, GenSparse(8, ell, values, seed_base + i)});
  }
  return out;
}

Outcome Criterion2(const std::vector<SparseCase>& cases) {
  constexpr double kBudget = 300;
  Outcome o;
  const auto start = Clock::now();
  int found = 0, fallback = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const SparseCase& c = cases[i];
    const bool oracle = !OracleFind(c.game, c.k).empty();
    const std::optional<MixedProfile> p =
        SparseSolve(SparseInstance(c.game, c.ell, c.k));
    if (8 <= c.ell * c.k) ++fallback;
    o.Require(p.has_value() == oracle,
              "verdict differs on instance " + std::to_string(i));
    if (p) {
      ++found;
      o.Require(VerifyEquilibrium(c.game, *p).IsEquilibrium(),
                "unverified profile on instance " + std::to_string(i));
    }
  }
  const double secs = Seconds(start);
  o.Require(secs < kBudget, "over time budget");
  o.detail << cases.size() << " instances (n = 8, l in {1,2,3}, k in {1,2,3}), "
           << found << " with an equilibrium, " << fallback
           << " below the branching threshold (n <= l k), " << secs
           << " s (budget " << kBudget << " s)";
  return o;
}

Outcome Criterion3(const std::vector<SparseCase>& signed_cases,
                   const std::vector<SparseCase>& nonneg_cases) {
  Outcome o;
  int entries = 0, over_two = 0, max_components = 0;
  for (const SparseCase& c : signed_cases) {
    for (const StructureEntry& e : CheckStructure(c.game, c.k).entries) {
      ++entries;
      max_components = std::max(max_components, e.extended_components);
      if (e.extended_components > 2) ++over_two;
    }
  }
  int nonneg_entries = 0, dichotomy_violations = 0, nonneg_over_two = 0;
  for (const SparseCase& c : nonneg_cases) {
    const StructureReport r = CheckStructure(c.game, c.k);
    o.Require(r.nonnegative_game, "companion instance has a negative entry");
    for (const StructureEntry& e : r.entries) {
      ++nonneg_entries;
      if (!e.support_dichotomy) ++dichotomy_violations;
      if (e.extended_components > 2) ++nonneg_over_two;
    }
  }
  o.Require(over_two == 0 && nonneg_over_two == 0,
            "extended support with more than two components");
  o.Require(dichotomy_violations == 0, "non-negative dichotomy violated");
  o.detail << entries << " minimal equilibria on the criterion-2 instances ("
           << over_two << " with > 2 extended components, max "
           << max_components << "); " << nonneg_entries
           << " on 200 non-negative companions (values {1,2}, same seeds "
              "and parameters), "
           << dichotomy_violations << " dichotomy violations, "
           << nonneg_over_two << " with > 2 extended components";
  return o;
}

Outcome Criterion4(const std::vector<SparseCase>& cases) {
  Outcome o;
  int instances = 0, equilibria = 0, negative = 0;
  for (const SparseCase& c : cases) {
    if (!(8 > c.ell * c.k)) continue;
    ++instances;
    for (const OracleHit& h : OracleFind(c.game, c.k)) {
      ++equilibria;
      const auto [row, col] = Payoffs(c.game, h.profile);
      if (row.Sign() < 0 || col.Sign() < 0) ++negative;
    }
  }
  o.Require(negative == 0, "negative equilibrium payoff");
  o.detail << instances << " instances with n > l k, " << equilibria
           << " oracle equilibria, " << negative << " with a negative payoff";
  return o;
}

// ------------------------------------------------------------ criterion 5

Outcome Criterion5() {
  constexpr double kBudget = 60;
  Outcome o;
  const auto start = Clock::now();
  Rng rng(5);
  std::int64_t runs = 0, emitted = 0, max_leaves = 0;
  double worst_ratio = 0;
  for (int i = 0; i < 50; ++i) {
    const int rows = 1 + rng.UniformInt(5);
    const int cols = 1 + rng.UniformInt(std::min(5, 10 - rows));
    const GameGraph g =
        testing::RandomBipartite(rng, rows, cols, 1 + rng.UniformInt(5), 0.55);
    const int delta = MaxDegree(g);
    const int n = g.NumVertices();
    o.Require(delta <= 5 && n <= 10, "graph outside the family");
    for (int t = 1; t <= 6; ++t) {
      for (int c = 1; c <= 2; ++c) {
        ++runs;
        std::set<std::vector<int>> brute;
        ForEachCombination(n, t, [&](const std::vector<int>& s) {
          if (testing::BruteComponents(g, s) == c) brute.insert(s);
          return true;
        });
        std::set<std::vector<int>> got;
        bool duplicate = false;
        const EnumerationStats es = EnumerateSubgraphs(
            g, t, c, [&](const SubgraphCandidate& s) {
              duplicate |= !got.insert(s.vertices).second;
              return true;
            });
        emitted += es.emitted;
        o.Require(got == brute, "enumeration differs from brute force");
        o.Require(!duplicate, "duplicate in the deduplicated stream");
        const double bound = std::pow(delta + 1.0, 2 * t) * std::pow(n, c);
        o.Require(static_cast<double>(es.leaves) <= bound,
                  "branch count above the bound");
        max_leaves = std::max(max_leaves, es.leaves);
        worst_ratio = std::max(worst_ratio, es.leaves / bound);
      }
    }
  }
  const double secs = Seconds(start);
  o.Require(secs < kBudget, "over time budget");
  o.detail << "50 graphs, " << runs << " (t, c) runs, " << emitted
           << " subgraphs, max leaves " << max_leaves
           << ", max leaves/bound " << worst_ratio << ", " << secs
           << " s (budget " << kBudget << " s)";
  return o;
}

// ------------------------------------------------------------ criterion 6

Outcome Criterion6() {
  Outcome o;
  int merges = 0, largest_support = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 1 + i % 3;
    const int n = 2 + (i / 3) % 7;
    const int ell = 1 + (i / 21) % 3;
    const UnbalancedInstance inst(GenUnbalanced(k, n, ell, 600 + i));
    const BimatrixGame& g = inst.game();
    const UnbalancedResult r = UnbalancedSolve(inst);
    const ColumnClasses classes = ComputeColumnClasses(inst);
    o.Require(VerifyEquilibrium(g, r.profile).IsEquilibrium(),
              "unverified profile");
    const IndexSet cols = r.profile.support().cols;
    largest_support = std::max(largest_support, static_cast<int>(cols.size()));
    o.Require(static_cast<int>(cols.size()) <= k + 1, "column support > k+1");
    std::set<int> used;
    for (int j : cols) {
      o.Require(used.insert(classes.class_of[j]).second,
                "two columns of one class");
    }
    for (const OracleHit& h : OracleFind(g, n)) {
      const IndexSet& s = h.support.cols;
      for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t q = p + 1; q < s.size(); ++q) {
          if (classes.class_of[s[p]] != classes.class_of[s[q]]) continue;
          ++merges;
          const Vector merged = MergeColumns(h.profile.y(), s[p], s[q]);
          o.Require(g.A() * merged == g.A() * h.profile.y(),
                    "merge changes Ay");
          o.Require(VerifyEquilibrium(g, MixedProfile(h.profile.x(), merged))
                        .IsEquilibrium(),
                    "merged profile fails verification");
        }
      }
    }
  }
  o.detail << "100 instances (k <= 3, n <= 8, l <= 3), largest column "
              "support "
           << largest_support << ", " << merges
           << " equivalent-column merges checked";
  return o;
}

// ------------------------------------------------------------ criterion 7

Outcome Criterion7() {
  Outcome o;
  const auto count = [](int values, int size) {
    ValueAlphabet alphabet;
    for (int v = 0; v < values; ++v) alphabet.values.push_back(v);
    return EnumeratePatterns(alphabet, size, size,
                             [](const EquilibriumPattern&) { return true; });
  };
  const std::int64_t c1 = count(2, 1), c2 = count(2, 2);
  o.Require(c1 == 4 && c2 == 256, "pattern counts");

  // Identity pattern: certified alone, and located inside a larger game.
  const EquilibriumPattern identity{Matrix::Identity(2), Matrix::Identity(2)};
  const std::optional<MixedProfile> cert = CertifyPattern(identity, {}, {});
  const Rational half(1, 2);
  o.Require(cert && cert->x() == Vector{half, half} &&
                cert->y() == Vector{half, half},
            "identity pattern not certified with (1/2, 1/2)");
  const Matrix host{{0, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
  const Matrix host_b{{1, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const std::optional<Occurrence> occ =
      FindOccurrence(BimatrixGame(host, host_b), identity, {});
  o.Require(occ.has_value(), "identity pattern not found in host game");

  int agree = 0, with_eq = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 5;
    const double density = 0.2 + 0.15 * (i % 4);
    const BimatrixGame g = GenWinLose(n, density, 700 + i);
    for (int k = 1; k <= 2; ++k) {
      const bool oracle = !OracleFind(g, k).empty();
      const std::optional<PatternResult> r = PatternSolve(g, k);
      o.Require(r.has_value() == oracle,
                "verdict differs on game " + std::to_string(i));
      if (r) {
        ++with_eq;
        o.Require(VerifyEquilibrium(g, r->profile).IsEquilibrium(),
                  "unverified lifted profile");
      }
      agree += r.has_value() == oracle;
    }
  }
  o.detail << "patterns: " << c1 << " (l=2,k=1), " << c2
           << " (l=2,k=2); identity pattern certified at (1/2,1/2) and found "
              "at rows "
           << (occ ? ToString(Support{occ->rows, occ->cols}) : "-") << "; "
           << agree << "/200 verdicts (100 games x k in {1,2}) match, "
           << with_eq << " with an equilibrium";
  return o;
}

// ------------------------------------------------------------ criterion 8

Outcome Criterion8() {
  Outcome o;
  Rng rng(8);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const int m = 2 + rng.UniformInt(5), n = 1 + rng.UniformInt(5);
    Matrix a = testing::RandomMatrix(rng, m, n, -3, 3);
    IndexSet J;
    for (int j = 0; j < n; ++j) {
      if (rng.Bernoulli(0.6)) J.push_back(j);
    }
    if (J.empty()) J.push_back(rng.UniformInt(n));
    const int i1 = rng.UniformInt(m);
    int i2 = rng.UniformInt(m - 1);
    if (i2 >= i1) ++i2;
    for (int j : J) a(i2, j) = a(i1, j);  // make i1, i2 J-equivalent
    Vector x(m), y(n);
    Rational xs = 0, ys = 0;
    for (auto& v : x) xs += (v = rng.UniformInt(4));
    if (xs.IsZero()) xs += (x[i1] = 1);
    if (x[i2].IsZero()) xs += (x[i2] = 1);  // mass to merge
    for (int j : J) ys += (y[j] = 1 + rng.UniformInt(5));
    for (auto& v : x) v /= xs;
    for (auto& v : y) v /= ys;
    const Vector merged = MergeColumns(x, i1, i2);  // plain vector merge
    o.Require(merged[i2].IsZero() && merged[i1] == x[i1] + x[i2],
              "merge construction");
    o.Require(Dot(LeftMultiply(merged, a), y) == Dot(LeftMultiply(x, a), y),
              "x^T A y changed by the merge");
    ++checked;
  }
  o.detail << checked << " random (game, x, y, J) tuples, exact equality";
  return o;
}

// ------------------------------------------------------------ criterion 9

BimatrixGame RockPaperScissorsBlocks(int blocks) {
  const int n = 3 * blocks;
  Matrix a(n, n);
  const int rps[3][3] = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  for (int b = 0; b < n; b += 3) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a(b + i, b + j) = rps[i][j];
    }
  }
  return BimatrixGame(a, testing::Negated(a));
}

Outcome Criterion9() {
  constexpr double kBudgetMs = 60000;
  Outcome o;
  std::istringstream in;
  std::ostringstream out, err;
  const int code = RunCli({"bench", "--family", "sparse", "--n", "300",
                           "--sparsity", "3", "--count", "5", "--seed", "900",
                           "-K", "2", "--algorithms", "sparse,baseline",
                           "--out", "acceptance_bench.csv"},
                          in, out, err);
  o.Require(code == 0, "bench failed: " + err.str());
  std::ifstream csv("acceptance_bench.csv");
  std::string line;
  std::getline(csv, line);
  double worst_ms = 0;
  int sparse_rows = 0, baseline_rows = 0;
  long long projected = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() < 8) continue;
    if (cells[1] == "sparse") {
      ++sparse_rows;
      const double ms = std::stod(cells[6]);
      worst_ms = std::max(worst_ms, ms);
      o.Require(ms < kBudgetMs, "seeded instance over 60 s");
    } else if (cells[1] == "baseline") {
      ++baseline_rows;
      projected = std::stoll(cells[7]);
      o.Require(cells[2] == "0" && projected > 1'000'000'000LL,
                "baseline projection not above 1e9");
    }
  }
  o.Require(sparse_rows == 5 && baseline_rows == 5, "bench rows missing");

  // Adversarial 3-sparse instance without any equilibrium of support <= 2:
  // the solver must exhaust every candidate.
  const BimatrixGame hard = RockPaperScissorsBlocks(100);
  SolveStats stats;
  const auto start = Clock::now();
  const std::optional<MixedProfile> p =
      SparseSolve(SparseInstance(hard, 3, 2), &stats);
  const double hard_ms = Seconds(start) * 1000;
  o.Require(!p.has_value(), "block game should have no small equilibrium");
  o.Require(hard_ms < kBudgetMs, "exhaustive instance over 60 s");
  o.detail << "5 seeded 300x300 3-sparse games: worst sparse_solve "
           << worst_ms << " ms, baseline projected " << projected
           << " LP calls (not executed); exhaustive block game: " << hard_ms
           << " ms, " << stats.lp_calls << " LP calls vs "
           << BaselineQueryCount(300, 300, 2)
           << " projected; CSV in acceptance_bench.csv";
  return o;
}

// ----------------------------------------------------------- criterion 10

Outcome Criterion10() {
  Outcome o;
  const std::vector<Rational> nonneg = {Rational(1), Rational(2), Rational(3)};
  int solved = 0, none = 0, failures = 0, input_errors = 0;
  std::map<std::string, int> per_algorithm;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t seed = 10000 + i;
    BimatrixGame game = testing::ZeroGame(1, 1);
    std::string algorithm;
    std::string k = std::to_string(1 + i % 2);
    switch (i % 6) {
      case 0:
        game = GenSparse(3 + i % 6, 1 + i % 3, DefaultSparseValues(), seed);
        algorithm = "sparse";
        break;
      case 1:
        game = GenSparse(3 + i % 5, 1 + i % 2, DefaultSparseValues(), seed);
        algorithm = "baseline";
        break;
      case 2:
        game = GenSparse(4 + i % 5, 1 + i % 3, nonneg, seed);
        algorithm = "sparse-nonneg";
        break;
      case 3:
        game = GenUnbalanced(1 + i % 3, 2 + i % 7, 1 + i % 3, seed);
        algorithm = "unbalanced";
        break;
      case 4:
        game = GenWinLose(2 + i % 4, 0.4, seed);
        algorithm = "pattern";
        break;
      default:
        game = GenWinLose(3 + i % 5, 0.5, seed);
        algorithm = "sparse";
        break;
    }
    std::istringstream in(SerializeGame(game));
    std::ostringstream out, err;
    const int code = RunCli(
        {"solve", "--algorithm", algorithm, "--max-support", k}, in, out, err);
    ++per_algorithm[algorithm];
    if (code == kExitFound) {
      ++solved;
      const ProfileDocument doc = ParseProfile(out.str());
      if (!VerifyEquilibrium(game, doc.profile).IsEquilibrium()) ++failures;
    } else if (code == kExitNotFound) {
      ++none;
    } else if (code == kExitInternalError) {
      ++failures;
    } else {
      ++input_errors;
    }
  }
  o.Require(failures == 0, "verification failure");
  o.Require(input_errors == 0, "unexpected input error");
  o.detail << "1000 instances over";
  for (const auto& [name, count] : per_algorithm) {
    o.detail << " " << name << ":" << count;
  }
  o.detail << "; " << solved << " profiles emitted and re-verified, " << none
           << " none found, " << failures << " verification failures";
  return o;
}

}  // namespace
}  // namespace nashfpt

int main() {
  using nashfpt::Outcome;
  const auto signed_cases =
      nashfpt::SparseCases(nashfpt::DefaultSparseValues(), 2000);
  const auto nonneg_cases = nashfpt::SparseCases(
      {nashfpt::Rational(1), nashfpt::Rational(2)}, 2000);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {
          {"oracle equivalence (baseline)", nashfpt::Criterion1},
          {"oracle equivalence (sparse)",
           [&] { return nashfpt::Criterion2(signed_cases); }},
          {"structural lemmas",
           [&] { return nashfpt::Criterion3(signed_cases, nonneg_cases); }},
          {"non-negative payoff lemma",
           [&] { return nashfpt::Criterion4(signed_cases); }},
          {"subgraph enumeration", nashfpt::Criterion5},
          {"unbalanced solver", nashfpt::Criterion6},
          {"pattern solver", nashfpt::Criterion7},
          {"J-equivalence identity", nashfpt::Criterion8},
          {"performance separation", nashfpt::Criterion9},
          {"exactness end-to-end", nashfpt::Criterion10},
      };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: "
              << (o.pass ? "PASS" : "FAIL") << " - " << o.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
