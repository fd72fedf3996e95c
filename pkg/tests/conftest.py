from fractions import Fraction

import pytest
from hypothesis import strategies as st

from symgames.core import from_upper, rock_paper_scissors, zero_game

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def games(draw, min_n=1, max_n=5, entries=small_rationals):
    n = draw(st.integers(min_n, max_n))
    values = draw(st.lists(entries, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return from_upper(n, values)


def vectors(n, elements=small_rationals):
    return st.lists(elements, min_size=n, max_size=n).map(tuple)


def rps4():
    # rock-paper-scissors plus an action that loses to all three
    return from_upper(4, [1, -1, 1, 1, 1, 1])


@pytest.fixture
def rps():
    return rock_paper_scissors()


@pytest.fixture
def zero3():
    return zero_game(3)


THIRD = Fraction(1, 3)


# one line per acceptance criterion, collected by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
