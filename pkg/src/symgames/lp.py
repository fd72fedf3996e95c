"""Exact two-phase simplex with Bland's rule.

The tableau is kept fraction-free: every entry is an integer and the tableau
represents ``entry / det`` where ``det`` is the (positive) determinant of the
current basis.  Pivots use the Bareiss update, so all divisions are exact and
no :class:`~fractions.Fraction` is created inside the pivot loop.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, Infeasible, Unbounded


def _integer_row(coeffs: Sequence, rhs) -> tuple[list[int], int, int]:
    """Scale a rational row to integers: returns ``(L * coeffs, L * rhs, L)``."""
    vals = list(coeffs) + [rhs]
    if all(type(v) is int for v in vals):
        return vals[:-1], vals[-1], 1
    L = 1
    fr = [Fraction(v) for v in vals]
    for v in fr:
        d = v.denominator
        if d != 1:
            L = L * d // math.gcd(L, d)
    ints = [v.numerator * (L // v.denominator) for v in fr]
    return ints[:-1], ints[-1], L


class _Tableau:
    def __init__(self, rows: list[list[int]], basis: list[int], objectives: list[list[int]]):
        self.rows = rows
        self.basis = basis
        self.objectives = objectives
        self.det = 1

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        a = prow[c]
        d = self.det
        for k, row in enumerate(self.rows):
            if k == r:
                continue
            f = row[c]
            if f:
                row[:] = [(x * a - f * y) // d for x, y in zip(row, prow)]
            elif a != d:
                row[:] = [x * a // d for x in row]
        for row in self.objectives:
            f = row[c]
            if f:
                row[:] = [(x * a - f * y) // d for x, y in zip(row, prow)]
            elif a != d:
                row[:] = [x * a // d for x in row]
        self.basis[r] = c
        self.det = a
        if a < 0:
            for row in self.rows:
                row[:] = [-x for x in row]
            for row in self.objectives:
                row[:] = [-x for x in row]
            self.det = -a

    def optimize(self, obj: list[int], allowed: int) -> None:
        """Run Bland's rule on ``obj`` over columns ``< allowed``."""
        rows = self.rows
        basis = self.basis
        while True:
            c = -1
            for j in range(allowed):
                if obj[j] < 0:
                    c = j
                    break
            if c < 0:
                return
            r = -1
            best_num = best_den = 0
            for i, row in enumerate(rows):
                a = row[c]
                if a > 0:
                    num = row[-1]
                    if r < 0:
                        r, best_num, best_den = i, num, a
                        continue
                    lhs = num * best_den
                    rhs = best_num * a
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                        r, best_num, best_den = i, num, a
            if r < 0:
                raise Unbounded("objective is unbounded on the feasible region")
            self.pivot(r, c)


def lp_optimize(
    objective: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> tuple[Fraction, tuple]:
    """Maximize ``objective . x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    Inputs may be ints, Fractions, or anything :class:`Fraction` accepts
    exactly.  Returns the exact optimum and an optimal basic solution.

    Raises :class:`Infeasible` or :class:`Unbounded`.
    """
    opt_num, det, nums = solve_integral(objective, A_ub, b_ub, A_eq, b_eq)
    return Fraction(opt_num, det), tuple(Fraction(x, det) for x in nums)


def solve_integral(
    objective: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> tuple[int, int, list[int]]:
    """Like :func:`lp_optimize` but returns ``(opt_num, det, x_nums)`` with
    optimum ``opt_num / det`` and solution ``x_nums / det``, all integers."""
    nvar = len(objective)
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise DimensionMismatch("constraint matrix and right-hand side lengths differ")
    for row in list(A_ub) + list(A_eq):
        if len(row) != nvar:
            raise DimensionMismatch("constraint row length differs from objective length")

    ub = [_integer_row(row, b)[:2] for row, b in zip(A_ub, b_ub)]
    eq = [_integer_row(row, b)[:2] for row, b in zip(A_eq, b_eq)]
    m_ub, m_eq = len(ub), len(eq)

    # Rows needing an artificial: every equality and every <= row with negative rhs.
    needs_art = [b < 0 for _, b in ub] + [True] * m_eq
    n_art = sum(needs_art)
    ncols = nvar + m_ub + n_art
    art_start = nvar + m_ub

    rows: list[list[int]] = []
    basis: list[int] = []
    k_art = art_start
    for i, (coeffs, b) in enumerate(ub + eq):
        row = [0] * (ncols + 1)
        sign = -1 if b < 0 else 1
        for j, a in enumerate(coeffs):
            row[j] = sign * a
        if i < m_ub:
            row[nvar + i] = sign
        row[-1] = sign * b
        if needs_art[i]:
            row[k_art] = 1
            basis.append(k_art)
            k_art += 1
        else:
            basis.append(nvar + i)
        rows.append(row)

    c_ints, _, scale = _integer_row(objective, 0)
    obj2 = [-c for c in c_ints] + [0] * (ncols - nvar + 1)

    tab = _Tableau(rows, basis, [obj2])

    if n_art:
        obj1 = [0] * (ncols + 1)
        for i, row in enumerate(rows):
            if basis[i] >= art_start:
                for j in range(ncols + 1):
                    obj1[j] -= row[j]
        for j in range(art_start, ncols):
            obj1[j] = 0
        tab.objectives.append(obj1)
        tab.optimize(obj1, art_start)
        if obj1[-1] != 0:
            raise Infeasible("no point satisfies the constraints")
        tab.objectives.pop()
        _drive_out_artificials(tab, art_start)

    tab.optimize(obj2, art_start)

    x = [0] * nvar
    for i, j in enumerate(tab.basis):
        if j < nvar:
            x[j] = tab.rows[i][-1]
    return obj2[-1], tab.det * scale, [v * scale for v in x]


def _drive_out_artificials(tab: _Tableau, art_start: int) -> None:
    # Artificials left basic sit at level zero. Rows with no structural
    # nonzero are redundant; they keep their artificial and never pivot again.
    for i, row in enumerate(tab.rows):
        if tab.basis[i] < art_start:
            continue
        col = next((j for j in range(art_start) if row[j] != 0), None)
        if col is not None:
            tab.pivot(i, col)
