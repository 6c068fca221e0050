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
#include "nashfpt/cli.h"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nashfpt/game_graph.h"
#include "nashfpt/game_io.h"
#include "nashfpt/generators.h"
#include "nashfpt/oracle.h"
#include "nashfpt/pattern_solver.h"
#include "nashfpt/sparse_solver.h"
#include "nashfpt/support_solver.h"
#include "nashfpt/unbalanced_solver.h"

namespace nashfpt {
namespace {

using json = nlohmann::json;

// A solver returned a profile that is not an equilibrium.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

json ToJson(const Vector& v) {
  json arr = json::array();
  for (const Rational& r : v) arr.push_back(r.ToString());
  return arr;
}

json ToJson(const IndexSet& s) { return json(std::vector<int>(s)); }

std::string Describe(const Violation& v) {
  std::ostringstream os;
  os << (v.player == Player::kRow ? "row" : "column") << " player: strategy "
     << v.played << " in support earns " << v.played_payoff
     << " but strategy " << v.better << " earns " << v.better_payoff;
  return os.str();
}

std::vector<Rational> ParseValueList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::Parse(item));
    } catch (const std::invalid_argument& e) {
      throw InputError("--values: " + std::string(e.what()));
    }
  }
  if (out.empty()) throw InputError("--values: empty list");
  return out;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

GameDocument LoadGame(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ParseGame(ss.str());
  }
  return ReadGame(path);
}

void Emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteFileOrThrow(path, text);
  }
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string algorithm = "sparse";
  int max_support = 2;
  std::string in;
  std::string out;
};

int DoSolve(const SolveArgs& a, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const GameDocument doc = LoadGame(a.in, in);
  const SolveOutcome result = RunAlgorithm(a.algorithm, doc.game, a.max_support);
  if (!result.profile) {
    err << "no equilibrium with support size at most " << a.max_support
        << " (" << a.algorithm << ", " << result.stats.lp_calls
        << " LP calls)\n";
    return kExitNotFound;
  }
  ProfileDocument pd{*result.profile, a.algorithm,
                     {{"max_support", std::to_string(a.max_support)},
                      {"lp_calls", std::to_string(result.stats.lp_calls)},
                      {"candidates", std::to_string(result.stats.candidates)}},
                     true};
  Emit(a.out, SerializeProfile(pd), out);
  return kExitFound;
}

// --------------------------------------------------------------- verify

int DoVerify(const std::string& game_path, const std::string& profile_path,
             std::ostream& out) {
  const GameDocument game = ReadGame(game_path);
  const ProfileDocument profile = ReadProfile(profile_path);
  try {
    CheckDimensions(game.game, profile.profile);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const Verdict v = VerifyEquilibrium(game.game, profile.profile);
  if (v.IsEquilibrium()) {
    out << "yes\n";
    return kExitFound;
  }
  out << "no: " << Describe(*v.violation) << "\n";
  return kExitNotFound;
}

// --------------------------------------------------------------- oracle

int DoOracle(const std::string& path, int k, const std::string& out_path,
             std::istream& in, std::ostream& out) {
  const GameDocument doc = LoadGame(path, in);
  const std::vector<OracleHit> hits = OracleFind(doc.game, k);
  for (const OracleHit& h : hits) {
    if (!VerifyEquilibrium(doc.game, h.profile).IsEquilibrium()) {
      throw VerificationFailure("oracle produced a non-equilibrium on " +
                                ToString(h.support));
    }
  }
  const std::vector<OracleHit> minimal = MinimalHits(hits);
  const StructureReport report = CheckStructure(doc.game, minimal);

  json j;
  j["max_support"] = k;
  j["hits"] = json::array();
  for (const OracleHit& h : hits) {
    j["hits"].push_back({{"rows", ToJson(h.support.rows)},
                         {"cols", ToJson(h.support.cols)},
                         {"x", ToJson(h.profile.x())},
                         {"y", ToJson(h.profile.y())}});
  }
  j["structure"]["nonnegative_game"] = report.nonnegative_game;
  j["structure"]["minimal"] = json::array();
  for (const StructureEntry& e : report.entries) {
    j["structure"]["minimal"].push_back(
        {{"rows", ToJson(e.hit.support.rows)},
         {"cols", ToJson(e.hit.support.cols)},
         {"case", ToString(e.structure_case)},
         {"extended_components", e.extended_components},
         {"support_components", e.support_components},
         {"zero_submatrix", e.zero_submatrix},
         {"nonnegative_payoffs", e.nonnegative_payoffs},
         {"support_dichotomy", e.support_dichotomy}});
  }
  Emit(out_path, j.dump(1) + "\n", out);
  return hits.empty() ? kExitNotFound : kExitFound;
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family = "sparse";
  int n = 10;
  int m = 0;  // 0: same as n
  int k = 2;
  int sparsity = 2;
  int value_count = 2;
  std::string values;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool independent_patterns = false;
  std::string out;
};

BimatrixGame Generate(const GenArgs& a, Metadata* meta) {
  (*meta)["family"] = a.family;
  (*meta)["seed"] = std::to_string(a.seed);
  if (a.family == "sparse") {
    const int m = a.m > 0 ? a.m : a.n;
    const std::vector<Rational> values =
        a.values.empty() ? DefaultSparseValues() : ParseValueList(a.values);
    (*meta)["sparsity"] = std::to_string(a.sparsity);
    (*meta)["shared_pattern"] = a.independent_patterns ? "false" : "true";
    return GenSparse(m, a.n, a.sparsity, values, a.seed,
                     {.shared_pattern = !a.independent_patterns});
  }
  if (a.family == "unbalanced") {
    (*meta)["k"] = std::to_string(a.k);
    (*meta)["value_count"] = std::to_string(a.value_count);
    return GenUnbalanced(a.k, a.n, a.value_count, a.seed);
  }
  if (a.family == "winlose") {
    (*meta)["density"] = std::to_string(a.density);
    return GenWinLose(a.n, a.density, a.seed);
  }
  throw InputError("unknown family '" + a.family + "'");
}

int DoGen(const GenArgs& a, std::ostream& out) {
  Metadata meta;
  const BimatrixGame game = Generate(a, &meta);
  Emit(a.out, SerializeGame(game, meta), out);
  return kExitFound;
}

// ---------------------------------------------------------------- stats

int DoStats(const std::string& path, std::istream& in, std::ostream& out) {
  const GameDocument doc = LoadGame(path, in);
  const BimatrixGame& g = doc.game;
  const GameGraph graph(g);
  out << "rows: " << g.rows() << "\n"
      << "cols: " << g.cols() << "\n"
      << "sparsity: " << ValidateSparsity(g) << "\n"
      << "edges: " << graph.NumEdges() << "\n"
      << "max_degree: " << MaxDegree(graph) << "\n"
      << "alphabet_size: " << AlphabetOf(g).size() << "\n"
      << "column_classes: " << ComputeColumnClasses(g.A()).size() << "\n"
      << "nonnegative: " << (g.NonNegative() ? "true" : "false") << "\n";
  return kExitFound;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  GenArgs gen;
  int count = 3;
  int max_support = 2;
  std::string algorithms = "sparse,baseline";
  std::int64_t baseline_limit = 2'000'000;
  std::string out;
};

std::string FormatMs(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

int DoBench(const BenchArgs& a, std::ostream& out) {
  std::ostringstream csv;
  csv << "instance,algorithm,executed,found,k1,k2,wall_ms,lp_calls,"
         "candidates\n";
  const std::vector<std::string> algorithms = SplitList(a.algorithms);
  for (const std::string& name : algorithms) {
    const auto& known = AlgorithmNames();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw InputError("--algorithms: unknown algorithm '" + name + "'");
    }
  }
  for (int i = 0; i < a.count; ++i) {
    GenArgs g = a.gen;
    g.seed = a.gen.seed + static_cast<std::uint64_t>(i);
    Metadata meta;
    const BimatrixGame game = Generate(g, &meta);
    const std::string instance = g.family + "-m" + std::to_string(game.rows()) +
                                 "-n" + std::to_string(game.cols()) + "-s" +
                                 std::to_string(g.seed);
    for (const std::string& name : algorithms) {
      if (name == "baseline") {
        const std::int64_t projected =
            BaselineQueryCount(game.rows(), game.cols(), a.max_support);
        if (projected > a.baseline_limit) {
          csv << instance << ",baseline,0,,,,," << projected << ","
              << projected << "\n";
          continue;
        }
      }
      const SolveOutcome r = RunAlgorithm(name, game, a.max_support);
      csv << instance << "," << name << ",1," << (r.profile ? 1 : 0) << ",";
      if (r.profile) {
        const Support s = r.profile->support();
        csv << s.rows.size() << "," << s.cols.size();
      } else {
        csv << ",";
      }
      csv << "," << FormatMs(r.wall_ms) << "," << r.stats.lp_calls << ","
          << r.stats.candidates << "\n";
    }
  }
  Emit(a.out, csv.str(), out);
  return kExitFound;
}

}  // namespace

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names = {
      "baseline", "sparse", "sparse-nonneg", "unbalanced", "pattern"};
  return names;
}

SolveOutcome RunAlgorithm(const std::string& algorithm,
                          const BimatrixGame& game, int max_support) {
  if (max_support < 1) {
    throw std::invalid_argument("max support must be at least 1");
  }
  SolveOutcome r;
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == "baseline") {
    r.profile = BaselineSolve(game, max_support, &r.stats);
  } else if (algorithm == "sparse") {
    SparseInstance inst(game, ValidateSparsity(game), max_support);
    r.profile = SparseSolve(inst, &r.stats);
  } else if (algorithm == "sparse-nonneg") {
    SparseInstance inst(game, ValidateSparsity(game), max_support);
    r.profile = SparseSolveNonNegative(inst, &r.stats);
  } else if (algorithm == "unbalanced") {
    UnbalancedResult u = UnbalancedSolve(UnbalancedInstance(game), &r.stats);
    r.profile = std::move(u.profile);
  } else if (algorithm == "pattern") {
    if (auto p = PatternSolve(game, max_support, &r.stats)) {
      r.profile = std::move(p->profile);
    }
  } else {
    throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (r.profile) {
    const Verdict v = VerifyEquilibrium(game, *r.profile);
    if (!v.IsEquilibrium()) {
      throw VerificationFailure(algorithm + " returned a non-equilibrium: " +
                                Describe(*v.violation));
    }
  }
  return r;
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Nash equilibria of small support in bimatrix games",
               "nashfpt"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "find an equilibrium");
  solve_cmd->add_option("--algorithm", solve.algorithm, "solver")
      ->check(CLI::IsMember(AlgorithmNames()));
  solve_cmd->add_option("--max-support,-k", solve.max_support,
                        "largest support size per player")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--in", solve.in, "game file (default: stdin)");
  solve_cmd->add_option("--out", solve.out, "profile file (default: stdout)");

  std::string verify_game, verify_profile;
  auto* verify_cmd = app.add_subcommand("verify", "check a profile");
  verify_cmd->add_option("--game", verify_game)->required();
  verify_cmd->add_option("--profile", verify_profile)->required();

  std::string oracle_in, oracle_out;
  int oracle_k = 2;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "all small-support equilibria");
  oracle_cmd->add_option("--in", oracle_in, "game file (default: stdin)");
  oracle_cmd->add_option("--max-support,-k", oracle_k)
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--out", oracle_out);

  GenArgs gen;
  auto add_gen_options = [](CLI::App* cmd, GenArgs* g) {
    cmd->add_option("--family", g->family)
        ->check(CLI::IsMember({"sparse", "unbalanced", "winlose"}));
    cmd->add_option("--n", g->n, "columns (rows too, unless --m)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--m", g->m, "rows of a sparse game");
    cmd->add_option("--k", g->k, "rows of an unbalanced game")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--sparsity", g->sparsity)->check(CLI::NonNegativeNumber);
    cmd->add_option("--value-count", g->value_count,
                    "unbalanced payoffs are drawn from 0..count-1")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--values", g->values,
                    "comma-separated payoff values of a sparse game");
    cmd->add_option("--density", g->density)->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", g->seed);
    cmd->add_flag("--independent-patterns", g->independent_patterns,
                  "draw separate sparsity patterns for A and B");
  };
  auto* gen_cmd = app.add_subcommand("gen", "generate a game");
  add_gen_options(gen_cmd, &gen);
  gen_cmd->add_option("--out", gen.out);

  std::string stats_in;
  auto* stats_cmd = app.add_subcommand("stats", "structural parameters");
  stats_cmd->add_option("--in", stats_in, "game file (default: stdin)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "seeded sweep, CSV output");
  add_gen_options(bench_cmd, &bench.gen);
  bench_cmd->add_option("--count", bench.count)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-support,-K", bench.max_support)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "comma-separated solver names");
  bench_cmd->add_option("--baseline-limit", bench.baseline_limit,
                        "skip the baseline above this many projected calls");
  bench_cmd->add_option("--out", bench.out);

  std::vector<const char*> argv = {"nashfpt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve_cmd) return DoSolve(solve, in, out, err);
    if (*verify_cmd) return DoVerify(verify_game, verify_profile, out);
    if (*oracle_cmd) return DoOracle(oracle_in, oracle_k, oracle_out, in, out);
    if (*gen_cmd) return DoGen(gen, out);
    if (*stats_cmd) return DoStats(stats_in, in, out);
    if (*bench_cmd) return DoBench(bench, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const VerificationFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace nashfpt
