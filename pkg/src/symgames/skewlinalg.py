"""Exact linear algebra for skew-symmetric matrices.

Pfaffians, principal Pfaffians, rank and the kernel of odd-order games, plus
Kaplansky's sign-alternation test for a unique totally mixed optimum.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .core import SkewGame, full_set, neg_support
from .errors import EvenDimension, NotSkewSymmetric, OddDimension


def _as_rows(A) -> list[list[Fraction]]:
    if isinstance(A, SkewGame):
        return [list(row) for row in A.entries]
    rows = [[Fraction(x) for x in row] for row in A]
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n:
            raise NotSkewSymmetric("matrix is not square")
        for j in range(i, n):
            if rows[i][j] != -rows[j][i]:
                raise NotSkewSymmetric(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not negatives")
    return rows


def pfaffian(A) -> Fraction:
    """Pfaffian of an even-order skew-symmetric matrix (or game).

    Skew-symmetric Gaussian elimination: eliminate two rows/columns at a time
    by a congruence, multiplying the pivot entries.  The 0x0 Pfaffian is 1.
    """
    a = _as_rows(A)
    n = len(a)
    if n % 2:
        raise OddDimension(f"Pfaffian of an odd order ({n}) matrix")
    result = Fraction(1)
    for k in range(0, n - 1, 2):
        piv = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k + 1:
            a[k + 1], a[piv] = a[piv], a[k + 1]
            for row in a:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            result = -result
        p = a[k][k + 1]
        result *= p
        rk, rk1 = a[k], a[k + 1]
        for i in range(k + 2, n):
            ai0 = a[i][k]
            ai1 = a[i][k + 1]
            if not ai0 and not ai1:
                continue
            row = a[i]
            for j in range(k + 2, n):
                # a[j][k] = -rk[j], a[j][k+1] = -rk1[j]
                row[j] += (ai0 * rk1[j] - ai1 * rk[j]) / p
    return result


def _minor_without(G: SkewGame, i: int) -> list[list[Fraction]]:
    return [
        [x for j, x in enumerate(row) if j != i]
        for r, row in enumerate(G.entries) if r != i
    ]


def principal_pfaffians(G: SkewGame) -> tuple:
    """Entry ``i`` is the Pfaffian of ``G`` with row and column ``i`` deleted."""
    if G.n % 2 == 0:
        raise EvenDimension(f"principal Pfaffians need odd order, got {G.n}")
    return tuple(pfaffian(_minor_without(G, i)) for i in range(G.n))


def kernel_vector(G: SkewGame) -> tuple:
    """Signed principal Pfaffians ``w_i = (-1)^(i+1) Pf_i`` (1-indexed).

    ``G w = 0`` always; ``w`` is zero exactly when ``rank(G) < n - 1`` and
    otherwise spans the kernel.
    """
    pf = principal_pfaffians(G)
    return tuple(x if k % 2 == 0 else -x for k, x in enumerate(pf))


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, m) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        prow = a[rank]
        for r in range(rank + 1, m):
            f = a[r][c]
            row = a[r]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank(G: SkewGame) -> int:
    M, _ = G.integer_form
    return integer_rank(M)


def kaplansky_totally_mixed(G: SkewGame) -> Optional[tuple]:
    """The unique totally mixed optimal strategy if the principal Pfaffians
    strictly alternate in sign, else ``None``."""
    pf = principal_pfaffians(G)
    if any(x == 0 for x in pf):
        return None
    if any((pf[k] > 0) == (pf[k + 1] > 0) for k in range(len(pf) - 1)):
        return None
    w = kernel_vector(G)
    s = sum(w)
    return tuple(x / s for x in w)


def kernel_sign_class(G: SkewGame) -> Optional[int]:
    """Sign pattern of a zero-free kernel vector, as the class ``{S, N - S}``.

    ``S`` is the set of negative coordinates; the class is reported by the
    member that does not contain action 1.  ``None`` when the kernel vector
    has a zero coordinate (including the rank-deficient case).
    """
    w = kernel_vector(G)
    if any(x == 0 for x in w):
        return None
    neg = neg_support(w)
    if neg & 1:
        neg ^= full_set(G.n)
    return neg
