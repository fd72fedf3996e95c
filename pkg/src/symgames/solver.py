"""Optimal strategies of symmetric zero-sum games, computed exactly.

For a skew-symmetric ``G`` the optimal strategies form the polytope

    P(G) = {p >= 0, sum(p) = 1, G p <= 0}

(the value of a symmetric game is always 0).  Every question below is
answered by exact linear programs over ``P(G)``; see :mod:`symgames.lp`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    SkewGame,
    cardinality,
    full_set,
    members,
    restrict,
    support,
)
from .errors import EmptyMatrix, EmptySubset, Infeasible, NotOptimal, OutOfRange
from .lp import lp_optimize, solve_integral
from .skewlinalg import integer_rank

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SolveReport:
    strategy: tuple
    maximal_support: int
    unique: bool
    quasi_strict: bool
    value: Fraction = ZERO


def _payoffs(G: SkewGame, p: Sequence[Fraction]) -> tuple:
    """``G p`` computed on the integer form, then rescaled."""
    M, L = G.integer_form
    out = []
    for row in M:
        s = ZERO
        for a, x in zip(row, p):
            if a and x:
                s += a * x
        out.append(s / L if L != 1 else s)
    return tuple(out)


def _in_optimal_set(G: SkewGame, p: Sequence[Fraction]) -> bool:
    if len(p) != G.n or any(x < 0 for x in p) or sum(p) != 1:
        return False
    return all(x <= 0 for x in _payoffs(G, p))


def some_optimal(G: SkewGame) -> tuple:
    """A vertex of ``P(G)``.

    Solved as the column player's program of the shifted game
    ``L G + c`` (all entries positive): maximize ``sum(y)`` subject to
    ``(L G + c) y <= 1``.  The optimum is ``1/c`` and ``p = c y``.
    """
    return _vertex(G)[0]


def _vertex(G: SkewGame) -> tuple[tuple, list[int]]:
    """:func:`some_optimal` together with an integer vector whose signs are those of ``G p``."""
    M, _ = G.integer_form
    c = max(abs(x) for row in M for x in row) + 1
    A = [[x + c for x in row] for row in M]
    _, _, y = solve_integral([1] * G.n, A, [1] * G.n)
    total = sum(y)
    p = tuple(Fraction(x, total) for x in y)
    gy = [sum(a * x for a, x in zip(row, y) if x) for row in M]
    return p, gy


def _optimal_set_program(G: SkewGame):
    """Constraint data for ``P(G)`` in :func:`lp_optimize` form."""
    M, _ = G.integer_form
    return M, [0] * G.n, [[1] * G.n], [1]


def max_coordinate(G: SkewGame, i: int) -> Fraction:
    """Largest probability action ``i`` receives in any optimal strategy."""
    if not 1 <= i <= G.n:
        raise OutOfRange(f"action {i} outside 1..{G.n}")
    obj = [0] * G.n
    obj[i - 1] = 1
    opt, _ = lp_optimize(obj, *_optimal_set_program(G))
    return opt


def min_coordinate(G: SkewGame, i: int) -> Fraction:
    """Smallest probability action ``i`` receives in any optimal strategy."""
    if not 1 <= i <= G.n:
        raise OutOfRange(f"action {i} outside 1..{G.n}")
    obj = [0] * G.n
    obj[i - 1] = -1
    opt, _ = lp_optimize(obj, *_optimal_set_program(G))
    return -opt


def _unique_certificate(G: SkewGame, p: Sequence[Fraction], gp: Sequence) -> tuple[bool, bool]:
    """``(quasi_strict, unique)`` for a vertex ``p`` of ``P(G)``.

    With ``S`` the support of ``p``: every optimal ``q`` is supported on ``S``
    and lies in the kernel of ``G_S`` when ``p`` is quasi-strict, so ``p`` is
    the only optimum iff it is quasi-strict and that kernel is a line
    (``rank(G_S) = |S| - 1``).  Without quasi-strictness the optimum is never
    unique.
    """
    S = support(p)
    quasi = all(gp[i] < 0 for i in range(G.n) if not S >> i & 1)
    if not quasi:
        return False, False
    k = cardinality(S)
    if k == 1:
        return True, True
    M, _ = G.integer_form
    idx = [a - 1 for a in members(S)]
    sub = [[M[i][j] for j in idx] for i in idx]
    return True, integer_rank(sub) == k - 1


def maximal_support(G: SkewGame) -> int:
    """Union of the supports of all optimal strategies."""
    p, gy = _vertex(G)
    quasi, unique = _unique_certificate(G, p, gy)
    if unique:
        return support(p)
    return _maximal_support_lp(G, support(p))


def _maximal_support_lp(G: SkewGame, known: int = 0) -> int:
    mask = known
    for i in range(1, G.n + 1):
        if not mask >> (i - 1) & 1 and max_coordinate(G, i) > 0:
            mask |= 1 << (i - 1)
    return mask


def equalized_actions(G: SkewGame) -> int:
    """Actions ``i`` with ``(G p)_i = 0`` for every optimal ``p``."""
    p, gp = _vertex(G)
    quasi, unique = _unique_certificate(G, p, gp)
    if unique:
        return sum(1 << i for i, x in enumerate(gp) if x == 0)
    M, _ = G.integer_form
    A_ub, b_ub, A_eq, b_eq = _optimal_set_program(G)
    mask = 0
    for i in range(G.n):
        if gp[i] < 0:
            continue
        # minimize (G p)_i, i.e. maximize -(M p)_i
        opt, _ = lp_optimize([-x for x in M[i]], A_ub, b_ub, A_eq, b_eq)
        if opt == 0:
            mask |= 1 << i
    return mask


def is_unique(G: SkewGame) -> bool:
    """Whether ``P(G)`` is a single point, by bounding every coordinate."""
    return all(max_coordinate(G, i) == min_coordinate(G, i) for i in range(1, G.n + 1))


def is_quasi_strict(G: SkewGame, p: Sequence) -> bool:
    """Every action outside the support of ``p`` earns strictly less than 0 against ``p``."""
    p = tuple(Fraction(x) for x in p)
    if not _in_optimal_set(G, p):
        raise NotOptimal("strategy is not optimal for this game")
    gp = _payoffs(G, p)
    return all(gp[i] < 0 for i in range(G.n) if p[i] == 0)


def analyze(G: SkewGame) -> SolveReport:
    p, gp = _vertex(G)
    quasi, unique = _unique_certificate(G, p, gp)
    maxsup = support(p) if unique else _maximal_support_lp(G, support(p))
    return SolveReport(strategy=p, maximal_support=maxsup, unique=unique, quasi_strict=quasi)


def has_optimal_with_support(G: SkewGame, S: int) -> bool:
    """Whether some optimal strategy has support exactly ``S``.

    Maximizes a common lower bound ``t`` on ``p_i`` (``i`` in ``S``) over the
    optimal strategies supported within ``S``; such a strategy exists iff
    the optimum is positive.
    """
    if S == 0:
        raise EmptySubset("support must be nonempty")
    if S >> G.n:
        raise OutOfRange("support not within the action set")
    M, _ = G.integer_form
    idx = [a - 1 for a in members(S)]
    k = len(idx)
    # variables: p_j for j in S, then t
    A_ub = [[M[i][j] for j in idx] + [0] for i in range(G.n)]
    b_ub = [0] * G.n
    for r in range(k):
        row = [0] * (k + 1)
        row[r] = -1
        row[k] = 1
        A_ub.append(row)
        b_ub.append(0)
    obj = [0] * k + [1]
    try:
        opt, _ = lp_optimize(obj, A_ub, b_ub, [[1] * k + [0]], [1])
    except Infeasible:
        return False
    return opt > 0


def subgame_totally_mixed(G: SkewGame, S: int) -> bool:
    """Whether the subgame on ``S`` has an optimal strategy with support ``S``."""
    sub = restrict(G, S)
    return has_optimal_with_support(sub, full_set(sub.n))


# -- general (not necessarily symmetric) zero-sum games ------------------------

@dataclass(frozen=True)
class BimatrixZeroSum:
    """Row player's payoff matrix of a two-player zero-sum game."""

    payoff: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.payoff)
        if not rows or not rows[0]:
            raise EmptyMatrix("payoff matrix is empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise EmptyMatrix("payoff matrix is ragged")
        object.__setattr__(self, "payoff", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.payoff), len(self.payoff[0])


def _column_strategy(A: Sequence[Sequence[Fraction]]) -> tuple[Fraction, tuple]:
    """Value and a minimizing column strategy of the row player's matrix ``A``."""
    lo = min(x for row in A for x in row)
    shift = ONE - lo
    B = [[x + shift for x in row] for row in A]
    m, n = len(A), len(A[0])
    opt, y = lp_optimize([1] * n, B, [1] * m)
    return ONE / opt - shift, tuple(x / opt for x in y)


def _interval_2x2(lines, maximize: bool) -> tuple[Fraction, Fraction, Fraction]:
    """Optimal value and argopt interval over x in [0, 1] of the lower (maximize)
    or upper (minimize) envelope of two lines ``(intercept, slope)``."""
    (a0, a1), (b0, b1) = lines
    env = min if maximize else max

    def f(x):
        return env(a0 + a1 * x, b0 + b1 * x)

    cands = [ZERO, ONE]
    if a1 != b1:
        x = (b0 - a0) / (a1 - b1)
        if 0 < x < 1:
            cands.append(x)
    vals = [f(x) for x in cands]
    best = max(vals) if maximize else min(vals)
    at = [x for x, v in zip(cands, vals) if v == best]
    return best, min(at), max(at)


def _solve_2x2(A) -> tuple[Fraction, tuple, tuple]:
    (a, b), (c, d) = A
    # row plays row 1 with prob x: payoff vs col 1 is c + (a - c) x, vs col 2 is d + (b - d) x
    v, xlo, xhi = _interval_2x2(((c, a - c), (d, b - d)), maximize=True)
    # column plays col 1 with prob y: row 1 gets b + (a - b) y, row 2 gets d + (c - d) y
    _, ylo, yhi = _interval_2x2(((b, a - b), (d, c - d)), maximize=False)
    x = (xlo + xhi) / 2
    y = (ylo + yhi) / 2
    return v, (x, ONE - x), (y, ONE - y)


def solve_bimatrix_zero_sum(A: BimatrixZeroSum) -> tuple[Fraction, tuple, tuple]:
    """Value and a maximin pair ``(row, col)`` of a general zero-sum game.

    2x2 games are solved in closed form and return the midpoint of each
    player's optimal interval, so the strategies have maximal support.
    Larger games use the primal programs of both players.
    """
    if not isinstance(A, BimatrixZeroSum):
        A = BimatrixZeroSum(A)
    P = A.payoff
    if A.shape == (2, 2):
        return _solve_2x2(P)
    value, col = _column_strategy(P)
    # the row player is the column player of -A^T
    neg_t = [[-P[i][j] for i in range(len(P))] for j in range(len(P[0]))]
    neg_value, row = _column_strategy(neg_t)
    assert neg_value == -value
    return value, row, col
