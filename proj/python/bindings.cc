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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nashfpt/cli.h"
#include "nashfpt/game_graph.h"
#include "nashfpt/game_io.h"
#include "nashfpt/generators.h"
#include "nashfpt/oracle.h"
#include "nashfpt/pattern_solver.h"
#include "nashfpt/sparse_solver.h"
#include "nashfpt/unbalanced_solver.h"

namespace py = pybind11;

namespace nashfpt {
namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns
// them into fractions.Fraction.
using Strings = std::vector<std::string>;

Vector ParseVector(const Strings& s) {
  Vector out;
  out.reserve(s.size());
  for (const std::string& v : s) out.push_back(Rational::Parse(v));
  return out;
}

Strings Format(const Vector& v) {
  Strings out;
  out.reserve(v.size());
  for (const Rational& r : v) out.push_back(r.ToString());
  return out;
}

Matrix ParseMatrix(const std::vector<Strings>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix has no rows");
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw std::invalid_argument("ragged matrix");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) = Rational::Parse(rows[i][j]);
    }
  }
  return m;
}

std::vector<Strings> FormatMatrix(const Matrix& m) {
  std::vector<Strings> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i].push_back(m(i, j).ToString());
    }
  }
  return out;
}

py::dict StatsDict(const SolveStats& s) {
  py::dict d;
  d["lp_calls"] = s.lp_calls;
  d["lp_solves"] = s.lp_solves;
  d["candidates"] = s.candidates;
  d["branch_leaves"] = s.branch_leaves;
  return d;
}

}  // namespace
}  // namespace nashfpt

PYBIND11_MODULE(_nashfpt, m) {
  using namespace nashfpt;
  m.doc() = "Exact small-support Nash equilibria of bimatrix games";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<BimatrixGame>(m, "BimatrixGame")
      .def(py::init([](const std::vector<Strings>& a,
                       const std::vector<Strings>& b) {
             return BimatrixGame(ParseMatrix(a), ParseMatrix(b));
           }),
           py::arg("a"), py::arg("b"))
      .def_property_readonly("rows", &BimatrixGame::rows)
      .def_property_readonly("cols", &BimatrixGame::cols)
      .def_property_readonly("a",
                             [](const BimatrixGame& g) { return FormatMatrix(g.A()); })
      .def_property_readonly("b",
                             [](const BimatrixGame& g) { return FormatMatrix(g.B()); })
      .def("__eq__", [](const BimatrixGame& x, const BimatrixGame& y) {
        return x == y;
      });

  m.def("algorithms", &AlgorithmNames);

  m.def(
      "solve",
      [](const BimatrixGame& game, const std::string& algorithm,
         int max_support) {
        SolveOutcome r;
        {
          py::gil_scoped_release release;
          r = RunAlgorithm(algorithm, game, max_support);
        }
        py::object profile = py::none();
        if (r.profile) {
          profile = py::make_tuple(Format(r.profile->x()), Format(r.profile->y()));
        }
        return py::make_tuple(profile, StatsDict(r.stats), r.wall_ms);
      },
      py::arg("game"), py::arg("algorithm"), py::arg("max_support"));

  m.def(
      "verify",
      [](const BimatrixGame& game, const Strings& x,
         const Strings& y) -> py::tuple {
        const MixedProfile p(ParseVector(x), ParseVector(y));
        const Verdict v = VerifyEquilibrium(game, p);
        if (v.IsEquilibrium()) return py::make_tuple(true, py::none());
        const Violation& w = *v.violation;
        py::dict d;
        d["player"] = w.player == Player::kRow ? "row" : "column";
        d["played"] = w.played;
        d["better"] = w.better;
        d["played_payoff"] = w.played_payoff.ToString();
        d["better_payoff"] = w.better_payoff.ToString();
        return py::make_tuple(false, py::object(d));
      },
      py::arg("game"), py::arg("x"), py::arg("y"));

  m.def(
      "best_response_gap",
      [](const BimatrixGame& game, const Strings& x, const Strings& y) {
        const auto gap =
            BestResponseGap(game, MixedProfile(ParseVector(x), ParseVector(y)));
        return py::make_tuple(gap.first.ToString(), gap.second.ToString());
      },
      py::arg("game"), py::arg("x"), py::arg("y"));

  m.def(
      "oracle",
      [](const BimatrixGame& game, int k, bool minimal_only) {
        std::vector<OracleHit> hits = OracleFind(game, k);
        if (minimal_only) hits = MinimalHits(hits);
        py::list out;
        for (const OracleHit& h : hits) {
          py::dict d;
          d["rows"] = h.support.rows;
          d["cols"] = h.support.cols;
          d["x"] = Format(h.profile.x());
          d["y"] = Format(h.profile.y());
          out.append(d);
        }
        return out;
      },
      py::arg("game"), py::arg("max_support"), py::arg("minimal_only") = false);

  m.def("stats", [](const BimatrixGame& g) {
    const GameGraph graph(g);
    py::dict d;
    d["rows"] = g.rows();
    d["cols"] = g.cols();
    d["sparsity"] = ValidateSparsity(g);
    d["edges"] = graph.NumEdges();
    d["max_degree"] = MaxDegree(graph);
    d["alphabet_size"] = AlphabetOf(g).size();
    d["column_classes"] = ComputeColumnClasses(g.A()).size();
    return d;
  });

  m.def(
      "gen_sparse",
      [](int rows, int cols, int sparsity, const Strings& values,
         std::uint64_t seed, bool shared_pattern) {
        return GenSparse(rows, cols, sparsity,
                         values.empty() ? DefaultSparseValues()
                                        : ParseVector(values),
                         seed, {.shared_pattern = shared_pattern});
      },
      py::arg("rows"), py::arg("cols"), py::arg("sparsity"),
      py::arg("values"), py::arg("seed"), py::arg("shared_pattern") = true);
  m.def("gen_unbalanced", &GenUnbalanced, py::arg("k"), py::arg("n"),
        py::arg("value_count"), py::arg("seed"));
  m.def("gen_winlose", &GenWinLose, py::arg("n"), py::arg("density"),
        py::arg("seed"));

  m.def("parse_game",
        [](const std::string& text) { return ParseGame(text).game; });
  m.def(
      "serialize_game",
      [](const BimatrixGame& g) { return SerializeGame(g); }, py::arg("game"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = RunCli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
