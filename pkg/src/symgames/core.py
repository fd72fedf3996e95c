"""Exact-rational symmetric zero-sum games.

Actions are 1-indexed. An action set is a plain ``int`` bitmask in which
action ``i`` is bit ``i - 1``; the empty set is ``0``.  Vectors (strategies,
payoff vectors, kernel vectors) are tuples of :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    EmptyMatrix,
    EmptySubset,
    GameError,
    LengthMismatch,
    NotSkewSymmetric,
    OutOfRange,
)

MAX_ACTIONS = 63

Vector = tuple  # tuple[Fraction, ...]


# -- action sets -------------------------------------------------------------

def action_set(actions: Iterable[int]) -> int:
    """Bitmask of the given 1-indexed actions."""
    mask = 0
    for a in actions:
        if a < 1 or a > MAX_ACTIONS:
            raise OutOfRange(f"action {a} outside 1..{MAX_ACTIONS}")
        mask |= 1 << (a - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Ascending 1-indexed actions contained in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_set(n: int) -> int:
    return (1 << n) - 1


def cardinality(mask: int) -> int:
    return bin(mask).count("1")


def format_set(mask: int) -> str:
    return "{" + ",".join(str(a) for a in members(mask)) + "}"


def parse_set(text: str) -> int:
    """Parse ``"{1,2,3}"``, ``"1,2,3"``, ``"0b111"`` or a decimal bitmask."""
    text = text.strip()
    if text.startswith("{") or "," in text:
        body = text.strip("{}").strip()
        if not body:
            return 0
        return action_set(int(tok) for tok in body.split(","))
    return int(text, 0)


def subsets(n: int, *, nonempty: bool = True) -> range:
    return range(1 if nonempty else 0, 1 << n)


def _check_within(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise OutOfRange(f"action set {format_set(mask)} not within 1..{n}")


# -- games -------------------------------------------------------------------

def _to_fraction(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True, eq=True)
class SkewGame:
    """An n-by-n skew-symmetric payoff matrix with exact rational entries.

    Construct through :func:`make_game` or :func:`from_upper`; the
    constructor validates skew-symmetry, so every other function may assume it.
    """

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_to_fraction(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise EmptyMatrix("game needs at least one action")
        if n > MAX_ACTIONS:
            raise GameError(f"at most {MAX_ACTIONS} actions are supported")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch("payoff matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise NotSkewSymmetric(
                        f"entry ({i + 1},{j + 1}) = {rows[i][j]} but "
                        f"({j + 1},{i + 1}) = {rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def upper(self) -> tuple:
        """Strict upper triangle, row-major."""
        return tuple(self.entries[i][j] for i, j in combinations(range(self.n), 2))

    @cached_property
    def integer_form(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        """``(M, L)`` with ``M = L * G`` integral and ``L`` the least such positive integer."""
        L = 1
        for row in self.entries:
            for x in row:
                if x.denominator != 1:
                    L = L * x.denominator // math.gcd(L, x.denominator)
        M = tuple(tuple(x.numerator * (L // x.denominator) for x in row) for row in self.entries)
        return M, L

    def __repr__(self):
        return f"SkewGame(n={self.n}, upper={[str(x) for x in self.upper()]})"

    @classmethod
    def _trusted(cls, rows: tuple) -> "SkewGame":
        # rows must already be skew-symmetric tuples of Fractions
        G = object.__new__(cls)
        object.__setattr__(G, "entries", rows)
        return G


def make_game(entries: Sequence[Sequence]) -> SkewGame:
    return SkewGame(tuple(tuple(row) for row in entries))


def from_upper(n: int, values: Sequence) -> SkewGame:
    """Build a game from its strict upper triangle, filled row-major."""
    if n < 1:
        raise EmptyMatrix("game needs at least one action")
    expected = n * (n - 1) // 2
    if len(values) != expected:
        raise LengthMismatch(f"n={n} needs {expected} upper-triangle values, got {len(values)}")
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    for (i, j), v in zip(combinations(range(n), 2), values):
        v = _to_fraction(v)
        rows[i][j] = v
        rows[j][i] = -v
    # skew-symmetric by construction
    return SkewGame._trusted(tuple(tuple(r) for r in rows))


def zero_game(n: int) -> SkewGame:
    return from_upper(n, [0] * (n * (n - 1) // 2))


def rock_paper_scissors() -> SkewGame:
    return from_upper(3, [1, -1, 1])


def restrict(G: SkewGame, S: int) -> SkewGame:
    """Principal subgame on the actions of ``S`` in ascending order."""
    if S == 0:
        raise EmptySubset("cannot restrict to the empty set")
    _check_within(S, G.n)
    idx = [a - 1 for a in members(S)]
    return SkewGame(tuple(tuple(G.entries[i][j] for j in idx) for i in idx))


def restrict_vec(v: Sequence, S: int) -> Vector:
    if S == 0:
        raise EmptySubset("cannot restrict to the empty set")
    _check_within(S, len(v))
    return tuple(v[a - 1] for a in members(S))


def flip(G: SkewGame, S: int) -> SkewGame:
    """Negate every payoff between an action in ``S`` and one outside it."""
    n = G.n
    _check_within(S, n)
    inside = [bool(S >> i & 1) for i in range(n)]
    return SkewGame(tuple(
        tuple(x if inside[i] == inside[j] else -x for j, x in enumerate(row))
        for i, row in enumerate(G.entries)
    ))


def flip_vec(v: Sequence, S: int) -> Vector:
    """Negate the coordinates indexed by ``S``."""
    _check_within(S, len(v))
    return tuple(-x if S >> i & 1 else x for i, x in enumerate(v))


def support(v: Sequence) -> int:
    mask = 0
    for i, x in enumerate(v):
        if x > 0:
            mask |= 1 << i
    return mask


def neg_support(v: Sequence) -> int:
    mask = 0
    for i, x in enumerate(v):
        if x < 0:
            mask |= 1 << i
    return mask


def matvec(G: SkewGame, v: Sequence) -> Vector:
    if len(v) != G.n:
        raise DimensionMismatch(f"vector of length {len(v)} for a game with {G.n} actions")
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in G.entries)


def expected_payoff(G: SkewGame, q: Sequence, p: Sequence) -> Fraction:
    """Row player's expected payoff ``q^T G p``."""
    if len(q) != G.n:
        raise DimensionMismatch(f"vector of length {len(q)} for a game with {G.n} actions")
    return sum((a * b for a, b in zip(q, matvec(G, p))), Fraction(0))


def strategy(probs: Iterable) -> Vector:
    """Validate and return a probability vector of Fractions."""
    p = tuple(_to_fraction(x) for x in probs)
    if not p:
        raise EmptyMatrix("strategy over zero actions")
    if any(x < 0 for x in p) or sum(p) != 1:
        raise GameError(f"not a probability vector: {[str(x) for x in p]}")
    return p


def unit(n: int, i: int) -> Vector:
    """Pure strategy on action ``i`` (1-indexed)."""
    if not 1 <= i <= n:
        raise OutOfRange(f"action {i} outside 1..{n}")
    return tuple(Fraction(int(k == i - 1)) for k in range(n))


# -- game files --------------------------------------------------------------

def parse_game(text: str) -> SkewGame:
    """Parse the plain-text game format: ``n`` then the upper triangle."""
    tokens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens.extend(line.split())
    if not tokens:
        raise EmptyMatrix("empty game file")
    try:
        n = int(tokens[0])
        values = [Fraction(tok) for tok in tokens[1:]]
    except ValueError as exc:
        raise GameError(f"malformed game file: {exc}") from None
    return from_upper(n, values)


def format_game(G: SkewGame) -> str:
    return f"{G.n}\n{' '.join(str(x) for x in G.upper())}\n"


def load_game(path) -> SkewGame:
    with open(path, encoding="utf-8") as fh:
        return parse_game(fh.read())


def save_game(G: SkewGame, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_game(G))
