from fractions import Fraction
from functools import cache
from itertools import product

import pytest

from symgames.core import cardinality, from_upper, full_set, make_game, restrict, rock_paper_scissors, zero_game
from symgames.errors import OddDimension, TooLarge
from symgames.oracle import (
    brute_supports,
    determinant,
    pfaffian_by_matchings,
    singular_submatrix_witness,
    solve_square,
    vertices_of_optimal_set,
)
from symgames.sampling import RandomStream

from conftest import THIRD, rps4


def test_vertices_examples():
    assert vertices_of_optimal_set(rock_paper_scissors()).vertices == ((THIRD,) * 3,)
    assert sorted(vertices_of_optimal_set(zero_game(3)).vertices) == sorted(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert vertices_of_optimal_set(rps4()).vertices == ((THIRD, THIRD, THIRD, 0),)
    with pytest.raises(TooLarge):
        vertices_of_optimal_set(zero_game(7))


def test_brute_supports_examples():
    assert brute_supports(rock_paper_scissors()) == (frozenset({7}), True)
    sup, unique = brute_supports(zero_game(3))
    assert sup == frozenset(range(1, 8)) and not unique


def test_matchings_examples():
    a = Fraction(5, 3)
    assert pfaffian_by_matchings([[0, a], [-a, 0]]) == a
    G = from_upper(4, [2, 3, 5, 7, 11, 13])
    assert pfaffian_by_matchings(G) == 2 * 13 - 3 * 11 + 5 * 7
    with pytest.raises(OddDimension):
        pfaffian_by_matchings(rock_paper_scissors())
    with pytest.raises(TooLarge):
        pfaffian_by_matchings(zero_game(10))


def test_linear_algebra_helpers():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1], [1, 0]]) == -1
    assert solve_square([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    assert solve_square([[1, 1], [1, 1]], [1, 1]) is None


def test_witness_examples():
    T = singular_submatrix_witness(zero_game(3))
    assert cardinality(T) == 2
    assert singular_submatrix_witness(rock_paper_scissors()) is None


def _clone_first(G):
    """Append a copy of action 1; the two copies can share its weight."""
    rows = [list(r) + [r[0]] for r in G.entries]
    rows.append(list(rows[0][:G.n]) + [0])
    return make_game(rows)


@cache
def multi_optimum_fixtures():
    out = [zero_game(n) for n in range(2, 6)]
    out.append(_clone_first(rock_paper_scissors()))
    out.append(_clone_first(rps4()))
    out.append(_clone_first(from_upper(2, [1])))
    assert not any(brute_supports(G)[1] for G in out)
    for u in product((-1, 0, 1), repeat=6):
        G = from_upper(4, u)
        if not brute_supports(G)[1]:
            out.append(G)
    rng = RandomStream(7, (0,)).rng
    for _ in range(150):
        G = from_upper(5, rng.integers(-1, 2, size=10).tolist())
        if not brute_supports(G)[1]:
            out.append(G)
    return tuple(out)


def test_every_multi_optimum_fixture_has_witness():
    fixtures = multi_optimum_fixtures()
    assert len(fixtures) > 100
    for G in fixtures:
        T = singular_submatrix_witness(G)
        assert T is not None, G
        assert cardinality(T) % 2 == 0 and T & ~full_set(G.n) == 0
        assert determinant(restrict(G, T).entries) == 0
