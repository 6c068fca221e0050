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
"""Exact small-support Nash equilibria of two-player bimatrix games.

Payoffs and probabilities are exact rationals. Inputs may be ints,
fractions.Fraction or "p/q" strings; floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _nashfpt
from ._nashfpt import InputError

__all__ = [
    "Game",
    "InputError",
    "Profile",
    "Solution",
    "algorithms",
    "best_response_gap",
    "cli",
    "gen_sparse",
    "gen_unbalanced",
    "gen_winlose",
    "oracle",
    "solve",
    "stats",
    "verify",
]


def _exact(v) -> str:
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError(f"{v!r} is not exact; use int, Fraction or 'p/q'")
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, str):
        return v
    raise TypeError(f"cannot interpret {v!r} as a rational")


def _strings(values: Iterable) -> list[str]:
    return [_exact(v) for v in values]


def _fractions(values: Iterable[str]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


class Game:
    """Bimatrix game (A, B): A pays the row player, B the column player."""

    def __init__(self, a: Sequence[Sequence], b: Sequence[Sequence]):
        self._game = _nashfpt.BimatrixGame(
            [_strings(r) for r in a], [_strings(r) for r in b])

    @classmethod
    def _wrap(cls, raw) -> "Game":
        g = cls.__new__(cls)
        g._game = raw
        return g

    @classmethod
    def from_json(cls, text: str) -> "Game":
        return cls._wrap(_nashfpt.parse_game(text))

    def to_json(self) -> str:
        return _nashfpt.serialize_game(self._game)

    @property
    def shape(self) -> tuple[int, int]:
        return self._game.rows, self._game.cols

    @property
    def a(self) -> list[list[Fraction]]:
        return [list(_fractions(r)) for r in self._game.a]

    @property
    def b(self) -> list[list[Fraction]]:
        return [list(_fractions(r)) for r in self._game.b]

    def __eq__(self, other) -> bool:
        return isinstance(other, Game) and self._game == other._game

    def __repr__(self) -> str:
        return f"Game(shape={self.shape})"


@dataclass(frozen=True)
class Profile:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    @property
    def support(self) -> tuple[list[int], list[int]]:
        return ([i for i, v in enumerate(self.x) if v],
                [j for j, v in enumerate(self.y) if v])


@dataclass(frozen=True)
class Solution:
    profile: Profile
    stats: dict = field(default_factory=dict)
    wall_ms: float = 0.0


def algorithms() -> list[str]:
    return list(_nashfpt.algorithms())


def solve(game: Game, algorithm: str = "sparse",
          max_support: int = 2) -> Optional[Solution]:
    """Runs one solver; returns None when no equilibrium is found.

    Every returned profile has already been verified exactly.
    """
    profile, solve_stats, wall_ms = _nashfpt.solve(
        game._game, algorithm, max_support)
    if profile is None:
        return None
    x, y = profile
    return Solution(Profile(_fractions(x), _fractions(y)), dict(solve_stats),
                    wall_ms)


def verify(game: Game, x: Sequence, y: Sequence) -> tuple[bool, Optional[dict]]:
    ok, violation = _nashfpt.verify(game._game, _strings(x), _strings(y))
    if violation is not None:
        violation = dict(violation)
        for key in ("played_payoff", "better_payoff"):
            violation[key] = Fraction(violation[key])
    return ok, violation


def best_response_gap(game: Game, x: Sequence,
                      y: Sequence) -> tuple[Fraction, Fraction]:
    row, col = _nashfpt.best_response_gap(game._game, _strings(x), _strings(y))
    return Fraction(row), Fraction(col)


def oracle(game: Game, max_support: int,
           minimal_only: bool = False) -> list[dict]:
    hits = _nashfpt.oracle(game._game, max_support, minimal_only)
    return [dict(h, x=_fractions(h["x"]), y=_fractions(h["y"])) for h in hits]


def stats(game: Game) -> dict:
    return dict(_nashfpt.stats(game._game))


def gen_sparse(n: int, sparsity: int, seed: int, values: Sequence = (),
               rows: Optional[int] = None, shared_pattern: bool = True) -> Game:
    return Game._wrap(_nashfpt.gen_sparse(
        n if rows is None else rows, n, sparsity, _strings(values), seed,
        shared_pattern))


def gen_unbalanced(k: int, n: int, value_count: int, seed: int) -> Game:
    return Game._wrap(_nashfpt.gen_unbalanced(k, n, value_count, seed))


def gen_winlose(n: int, density: float, seed: int) -> Game:
    return Game._wrap(_nashfpt.gen_winlose(n, density, seed))


def cli(args: Sequence[str], stdin: str = "") -> tuple[int, str, str]:
    """Runs the command-line tool in-process: (exit code, stdout, stderr)."""
    return tuple(_nashfpt.run_cli(list(args), stdin))
