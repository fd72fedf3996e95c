from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symgames.core import (
    cardinality,
    from_upper,
    full_set,
    make_game,
    matvec,
    rock_paper_scissors,
    support,
    unit,
    zero_game,
)
from symgames.errors import EmptyMatrix, EmptySubset, Infeasible, NotOptimal, OutOfRange, Unbounded
from symgames.lp import lp_optimize
from symgames.oracle import vertices_of_optimal_set
from symgames.sampling import SamplerSpec, sample
from symgames.solver import (
    analyze,
    equalized_actions,
    has_optimal_with_support,
    is_quasi_strict,
    is_unique,
    max_coordinate,
    maximal_support,
    min_coordinate,
    solve_bimatrix_zero_sum,
    some_optimal,
    subgame_totally_mixed,
)

from conftest import THIRD, games, rps4

HALF = Fraction(1, 2)


# -- lp ----------------------------------------------------------------------

def test_lp_over_rps_optimal_set():
    rps = rock_paper_scissors()
    opt, x = lp_optimize([1, 0, 0], rps.entries, [0] * 3, [[1, 1, 1]], [1])
    assert opt == THIRD
    assert x == (THIRD,) * 3
    assert vertices_of_optimal_set(rps).vertices == (x,)


def test_lp_simplex_only():
    assert lp_optimize([1, 0, 0], A_eq=[[1, 1, 1]], b_eq=[1])[0] == 1


def test_lp_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        lp_optimize([1, 0], [[1, 0]], [-1], [[1, 1]], [1])
    with pytest.raises(Unbounded):
        lp_optimize([1, 1], [[1, -1]], [1])


def test_lp_rational_data():
    # max 3x + 2y, x + y <= 4/5, x + 3y <= 6/5, x <= 1/2
    opt, (x, y) = lp_optimize([3, 2], [[1, 1], [1, 3], [1, 0]],
                              [Fraction(4, 5), Fraction(6, 5), HALF])
    # x = 1/2 and the second row binds: y = (6/5 - 1/2) / 3
    assert (x, y) == (HALF, Fraction(7, 30))
    assert opt == Fraction(59, 30)


def test_lp_redundant_equalities():
    opt, x = lp_optimize([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert opt == 1 and sum(x) == 1


def test_lp_degenerate_cycling_example():
    # Beale's classic cycling instance; Bland's rule must terminate
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9],
         [HALF, -90, Fraction(-1, 50), 3],
         [0, 0, 1, 0]]
    opt, x = lp_optimize(c, A, [0, 0, 1])
    assert opt == Fraction(1, 20)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(0, 6), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_lp_matches_scipy(A, b, c):
    from scipy.optimize import linprog

    A = A + [[1, 1, 1]]
    b = b[:len(A) - 1] + [10]
    res = linprog([-x for x in c], A_ub=A, b_ub=b, method="highs")
    opt, x = lp_optimize(c, A, b)
    assert res.status == 0
    assert abs(float(opt) + res.fun) < 1e-7
    assert all(x_i >= 0 for x_i in x)
    assert all(sum(a * v for a, v in zip(row, x)) <= rhs for row, rhs in zip(A, b))
    assert sum(a * v for a, v in zip(c, x)) == opt


# -- fixtures from the operation examples -----------------------------------------

def test_some_optimal_examples():
    assert some_optimal(rock_paper_scissors()) == (THIRD,) * 3
    assert some_optimal(zero_game(3)) in {unit(3, i) for i in (1, 2, 3)}
    assert some_optimal(make_game([[0]])) == (1,)


def test_coordinate_bounds():
    rps, zero = rock_paper_scissors(), zero_game(3)
    assert max_coordinate(rps, 1) == min_coordinate(rps, 1) == THIRD
    assert (max_coordinate(zero, 1), min_coordinate(zero, 1)) == (1, 0)
    assert max_coordinate(rps4(), 4) == 0
    with pytest.raises(OutOfRange):
        max_coordinate(rps, 4)
    with pytest.raises(OutOfRange):
        min_coordinate(rps, 0)


def test_maximal_support_and_equalizers():
    for G in (rock_paper_scissors(), zero_game(3), rps4()):
        assert maximal_support(G) == 0b111
        assert equalized_actions(G) == 0b111
    assert matvec(rps4(), (THIRD, THIRD, THIRD, 0))[3] == -1


def test_uniqueness_examples():
    assert is_unique(rock_paper_scissors())
    assert not is_unique(zero_game(3))
    assert is_unique(from_upper(2, [1]))
    assert some_optimal(from_upper(2, [1])) == (1, 0)


def test_quasi_strict_examples():
    assert is_quasi_strict(rock_paper_scissors(), (THIRD,) * 3)
    assert not is_quasi_strict(zero_game(3), (1, 0, 0))
    assert is_quasi_strict(rps4(), (THIRD, THIRD, THIRD, 0))
    with pytest.raises(NotOptimal):
        is_quasi_strict(rock_paper_scissors(), (1, 0, 0))


def test_analyze_examples():
    r = analyze(rock_paper_scissors())
    assert (r.strategy, r.maximal_support, r.unique, r.quasi_strict, r.value) == (
        (THIRD,) * 3, 0b111, True, True, 0)
    assert not analyze(zero_game(3)).unique


def test_odd_integer_games_are_unique():
    spec = SamplerSpec("odd-int", 5)
    for t in range(1000):
        assert analyze(sample(spec, 11, t)).unique


def test_support_feasibility_examples():
    rps, zero = rock_paper_scissors(), zero_game(3)
    assert has_optimal_with_support(rps, 0b111)
    assert not has_optimal_with_support(rps, 0b001)
    assert all(has_optimal_with_support(zero, S) for S in range(1, 8))
    assert has_optimal_with_support(rps4(), 0b0111)
    assert not has_optimal_with_support(rps4(), 0b1111)
    with pytest.raises(EmptySubset):
        has_optimal_with_support(rps, 0)


def test_subgame_totally_mixed_examples():
    rps = rock_paper_scissors()
    assert subgame_totally_mixed(rps, 0b111)
    assert not subgame_totally_mixed(rps, 0b011)
    for S in (1, 2, 4):
        assert subgame_totally_mixed(rps, S)
    with pytest.raises(EmptySubset):
        subgame_totally_mixed(rps, 0)


def test_bimatrix_examples():
    assert solve_bimatrix_zero_sum([[1, -1], [-1, 1]]) == (0, (HALF, HALF), (HALF, HALF))
    assert solve_bimatrix_zero_sum([[5]]) == (5, (1,), (1,))
    # pure saddle point at (1, 2)
    v, row, col = solve_bimatrix_zero_sum([[3, 1], [0, -2]])
    assert v == 1 and row == (1, 0) and col == (0, 1)
    with pytest.raises(EmptyMatrix):
        solve_bimatrix_zero_sum([[]])


def test_bimatrix_general_shape():
    v, row, col = solve_bimatrix_zero_sum([[2, -1, 0], [-1, 1, 3]])
    A = [[2, -1, 0], [-1, 1, 3]]
    assert min(sum(row[i] * A[i][j] for i in range(2)) for j in range(3)) == v
    assert max(sum(A[i][j] * col[j] for j in range(3)) for i in range(2)) == v


@settings(max_examples=100, deadline=None)
@given(games(max_n=5))
def test_symmetric_game_as_bimatrix(G):
    v, row, col = solve_bimatrix_zero_sum(G.entries)
    assert v == 0
    assert all(x <= 0 for x in matvec(G, row))


# -- properties ---------------------------------------------------------------------

def _check_report(G):
    r = analyze(G)
    p = r.strategy
    assert all(x >= 0 for x in p) and sum(p) == 1
    assert all(x <= 0 for x in matvec(G, p))
    assert support(p) & ~r.maximal_support == 0
    if r.unique:
        assert r.quasi_strict
        assert cardinality(support(p)) % 2 == 1
    return r


@settings(max_examples=300, deadline=None)
@given(games(max_n=5))
def test_report_invariants(G):
    _check_report(G)


ternary = st.sampled_from([-1, 0, 1])


@settings(max_examples=300, deadline=None)
@given(st.one_of(games(max_n=5), games(max_n=5, entries=ternary)))
def test_certificate_matches_coordinate_bounds(G):
    r = analyze(G)
    assert r.unique == is_unique(G)
    assert r.maximal_support == maximal_support(G)
    full_lp = 0
    for i in range(1, G.n + 1):
        if max_coordinate(G, i) > 0:
            full_lp |= 1 << (i - 1)
    assert r.maximal_support == full_lp


@settings(max_examples=200, deadline=None)
@given(st.one_of(games(max_n=5), games(max_n=5, entries=ternary)))
def test_equalizer_equals_maximal_support(G):
    assert equalized_actions(G) == maximal_support(G)


def test_equalizer_on_zero_games():
    for n in range(1, 6):
        assert equalized_actions(zero_game(n)) == maximal_support(zero_game(n)) == full_set(n)
