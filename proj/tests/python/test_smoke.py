# Copyright 2026 The nashfpt Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from fractions import Fraction

import pytest

import nashfpt

HALF = Fraction(1, 2)


def pennies():
    return nashfpt.Game([[1, -1], [-1, 1]], [[-1, 1], [1, -1]])


def test_solve_matching_pennies_every_general_solver():
    for algorithm in ("baseline", "sparse", "pattern"):
        sol = nashfpt.solve(pennies(), algorithm, 2)
        assert sol is not None, algorithm
        assert sol.profile.x == (HALF, HALF)
        assert sol.profile.y == (HALF, HALF)
        assert sol.stats["lp_calls"] >= 1
    assert nashfpt.solve(pennies(), "baseline", 1) is None


def test_verify_and_gap():
    ok, violation = nashfpt.verify(pennies(), [HALF, HALF], ["1/2", "1/2"])
    assert ok and violation is None
    ok, violation = nashfpt.verify(pennies(), [1, 0], [1, 0])
    assert not ok
    assert violation["player"] == "column"
    assert violation["better_payoff"] == 1
    assert nashfpt.best_response_gap(pennies(), [1, 0], [1, 0]) == (0, 2)


def test_floats_and_decimals_are_rejected():
    with pytest.raises(TypeError):
        nashfpt.Game([[0.5]], [[1]])
    with pytest.raises(ValueError):
        nashfpt.Game([["0.5"]], [["1"]])


def test_generators_stats_and_json_round_trip():
    g = nashfpt.gen_sparse(12, 2, seed=3)
    s = nashfpt.stats(g)
    assert s["rows"] == 12 and s["sparsity"] <= 2 and s["max_degree"] <= 2
    assert nashfpt.Game.from_json(g.to_json()) == g
    u = nashfpt.gen_unbalanced(2, 6, 3, seed=1)
    assert u.shape == (2, 6)
    sol = nashfpt.solve(u, "unbalanced", 3)
    assert sol is not None
    assert nashfpt.verify(u, sol.profile.x, sol.profile.y)[0]
    w = nashfpt.gen_winlose(4, 1.0, seed=0)
    assert all(v == 1 for row in w.a for v in row)


def test_oracle():
    coord = nashfpt.Game([[1, 0], [0, 1]], [[1, 0], [0, 1]])
    assert len(nashfpt.oracle(coord, 2)) == 3
    minimal = nashfpt.oracle(coord, 2, minimal_only=True)
    assert [(h["rows"], h["cols"]) for h in minimal] == [([0], [0]), ([1], [1])]


def test_cli_in_process():
    code, out, err = nashfpt.cli(
        ["solve", "--algorithm", "baseline", "--max-support", "1"],
        stdin=pennies().to_json())
    assert code == 1 and out == ""
    code, out, _ = nashfpt.cli(["stats"], stdin=pennies().to_json())
    assert code == 0 and "sparsity: 2" in out
    code, _, err = nashfpt.cli(["solve", "--algorithm", "nope"])
    assert code == 2
    assert "sparse" in nashfpt.algorithms()
