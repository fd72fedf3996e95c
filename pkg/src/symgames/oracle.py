"""Brute-force reference computations for small games.

Nothing here touches the simplex code: the optimal set is found by
enumerating active constraint sets, Pfaffians by summing over perfect
matchings, determinants by plain Gaussian elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .core import SkewGame, cardinality, restrict
from .errors import OddDimension, TooLarge

MAX_VERTEX_N = 6
MAX_WITNESS_N = 8
MAX_MATCHING_DIM = 8


@dataclass(frozen=True)
class VertexSet:
    vertices: tuple
    complete: bool = True


def solve_square(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[tuple]:
    """Unique solution of ``A x = b`` or ``None`` when ``A`` is singular."""
    n = len(A)
    m = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(row[n] for row in m)


def determinant(A: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in A]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def _times(G: SkewGame, p: Sequence[Fraction]) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, p)) for row in G.entries)


def _enumerate_vertices(G: SkewGame) -> list:
    n = G.n
    # inequality k < n: -p_k <= 0 ; k >= n: (G p)_{k-n} <= 0
    ineq = []
    for k in range(n):
        ineq.append([Fraction(-1) if j == k else Fraction(0) for j in range(n)])
    for row in G.entries:
        ineq.append(list(row))
    ones = [Fraction(1)] * n
    rhs = [Fraction(1)] + [Fraction(0)] * (n - 1)
    found = []
    seen = set()
    for active in combinations(range(2 * n), n - 1):
        x = solve_square([ones] + [ineq[k] for k in active], rhs)
        if x is None or x in seen:
            continue
        if any(v < 0 for v in x) or any(v > 0 for v in _times(G, x)):
            continue
        seen.add(x)
        found.append(x)
    found.sort()
    return found


def vertices_of_optimal_set(G: SkewGame) -> VertexSet:
    """All vertices of ``{p >= 0, sum(p) = 1, G p <= 0}``."""
    if G.n > MAX_VERTEX_N:
        raise TooLarge(f"vertex enumeration is capped at n={MAX_VERTEX_N}")
    return VertexSet(tuple(_enumerate_vertices(G)))


def brute_supports(G: SkewGame) -> tuple[frozenset, bool]:
    """Every support realized by some optimal strategy, and whether the optimum is unique.

    Supports of convex combinations of vertices with positive weights are
    exactly the unions of the vertex supports involved.
    """
    verts = vertices_of_optimal_set(G).vertices
    unions = {0}
    for v in verts:
        s = sum(1 << i for i, x in enumerate(v) if x > 0)
        unions |= {u | s for u in unions}
    unions.discard(0)
    return frozenset(unions), len(verts) == 1


def _perfect_matchings(items: tuple):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for m in _perfect_matchings(rest[:k] + rest[k + 1:]):
            yield ((first, partner),) + m


def _parity(seq: Sequence[int]) -> int:
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def pfaffian_by_matchings(A: Sequence[Sequence]) -> Fraction:
    """Signed sum over perfect matchings of the products of matched entries."""
    rows = A.entries if isinstance(A, SkewGame) else A
    n = len(rows)
    if n % 2:
        raise OddDimension(f"Pfaffian of an odd order ({n}) matrix")
    if n > MAX_MATCHING_DIM:
        raise TooLarge(f"matching enumeration is capped at dimension {MAX_MATCHING_DIM}")
    total = Fraction(0)
    for matching in _perfect_matchings(tuple(range(n))):
        term = Fraction(_parity([k for pair in matching for k in pair]))
        for i, j in matching:
            term *= Fraction(rows[i][j])
            if not term:
                break
        total += term
    return total


def singular_submatrix_witness(G: SkewGame) -> Optional[int]:
    """An even-size action set whose principal submatrix is singular, or ``None``
    when the optimal strategy is unique.

    Every vertex of a non-singleton optimal set is a non-quasi-strict optimum
    ``p``; with ``i`` an unplayed action earning 0, both ``G_S`` and
    ``G_{S+i}`` (``S`` the support of ``p``) annihilate ``p``, and one of the
    two has even size.
    """
    if G.n > MAX_WITNESS_N:
        raise TooLarge(f"witness search is capped at n={MAX_WITNESS_N}")
    verts = _enumerate_vertices(G)
    if len(verts) <= 1:
        return None
    for p in verts:
        gp = _times(G, p)
        S = sum(1 << i for i, x in enumerate(p) if x > 0)
        for i in range(G.n):
            if S >> i & 1 or gp[i] != 0:
                continue
            T = S if cardinality(S) % 2 == 0 else S | (1 << i)
            sub = restrict(G, T)
            if determinant(sub.entries) == 0:
                return T
    return None
