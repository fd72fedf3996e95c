from collections import Counter
from fractions import Fraction
import math

import pytest

from symgames.core import flip, rock_paper_scissors, zero_game
from symgames.errors import GameError, TooLarge
from symgames.sampling import (
    RandomStream,
    SamplerSpec,
    all_tournaments,
    draw,
    gaussian_game,
    odd_int_game,
    sample,
    substream,
    symmetrized,
    tournament_game,
    uniform_game,
)
from symgames.solver import analyze


def _sign_fraction(games):
    pos = total = 0
    for G in games:
        for x in G.upper():
            total += 1
            pos += x > 0
    return pos, total


def _within_3_sigma(pos, total):
    return abs(pos - total / 2) <= 3 * math.sqrt(total / 4)


def test_odd_int_entries():
    G = odd_int_game(5, 3, substream(1, 0))
    assert all(x.denominator == 1 and x % 2 == 1 and abs(x) <= 7 for x in G.upper())
    assert all(abs(x) == 1 for x in odd_int_game(4, 0, substream(1, 0)).upper())
    with pytest.raises(GameError):
        odd_int_game(3, -1, substream(1, 0))


def test_odd_int_sign_marginal():
    pos, total = _sign_fraction(odd_int_game(2, 4, substream(5, t)) for t in range(100_000))
    assert _within_3_sigma(pos, total)


def test_gaussian_sign_marginal_and_exactness():
    pos, total = _sign_fraction(gaussian_game(2, substream(5, t)) for t in range(100_000))
    assert _within_3_sigma(pos, total)
    G = gaussian_game(4, substream(2, 3))
    for x in G.upper():
        assert Fraction(float(x)) == x


def test_uniform_range():
    w = Fraction(3, 2)
    G = uniform_game(5, w, substream(1, 1))
    assert all(abs(x) <= w for x in G.upper())
    with pytest.raises(GameError):
        uniform_game(3, 0, substream(1, 1))


def test_streams_are_deterministic():
    a, b = RandomStream(9, (4,)), RandomStream(9, (4,))
    assert a.rng.integers(0, 2**32, size=8).tolist() == b.rng.integers(0, 2**32, size=8).tolist()
    assert gaussian_game(4, substream(3, 2)) == gaussian_game(4, substream(3, 2))
    assert substream(3, 0).rng.random() != substream(3, 1).rng.random()


def test_tournaments():
    assert sum(1 for _ in all_tournaments(2)) == 2
    games = list(all_tournaments(3))
    assert len(set(games)) == 8
    cyclic = [G for G in games if analyze(G).strategy == (Fraction(1, 3),) * 3]
    assert len(cyclic) == 2
    assert sum(1 for _ in all_tournaments(5)) == 1024
    with pytest.raises(TooLarge):
        next(all_tournaments(8))


def test_tournament_sampler():
    seen = Counter(tournament_game(3, substream(1, t)) for t in range(4000))
    assert len(seen) == 8
    assert all(analyze(G).unique for G in list(seen)[:8])
    cyclic = sum(c for G, c in seen.items() if analyze(G).maximal_support == 0b111)
    assert abs(cyclic - 1000) <= 3 * math.sqrt(4000 * 0.25 * 0.75)


def test_symmetrized_constant_games():
    rps = rock_paper_scissors()
    spec = symmetrized(SamplerSpec("constant", 3, game=rps))
    flips = {flip(rps, S) for S in range(8)}
    drawn = {sample(spec, 1, t) for t in range(200)}
    assert drawn == flips
    zspec = symmetrized(SamplerSpec("constant", 3, game=zero_game(3)))
    assert all(sample(zspec, 1, t) == zero_game(3) for t in range(20))


def test_double_symmetrization_stays_in_flip_orbit():
    rps = rock_paper_scissors()
    spec = symmetrized(symmetrized(SamplerSpec("constant", 3, game=rps)))
    assert {sample(spec, 2, t) for t in range(200)} == {flip(rps, S) for S in range(8)}


def test_spec_validation_and_roundtrip():
    with pytest.raises(GameError):
        SamplerSpec("cauchy", 3)
    with pytest.raises(GameError):
        SamplerSpec("odd-int", 0)
    with pytest.raises(GameError):
        SamplerSpec("symmetrized", 3)
    with pytest.raises(GameError):
        SamplerSpec("constant", 3)
    with pytest.raises(GameError):
        SamplerSpec("constant", 2, game=rock_paper_scissors())
    specs = [
        SamplerSpec("odd-int", 3, bound=2),
        SamplerSpec("uniform", 4, half_width=Fraction(5, 2)),
        symmetrized(SamplerSpec("gaussian", 3)),
        SamplerSpec("constant", 3, game=rock_paper_scissors()),
    ]
    for s in specs:
        assert SamplerSpec.from_dict(s.to_dict()).to_dict() == s.to_dict()


def test_draw_dispatch():
    for kind in ("odd-int", "gaussian", "uniform", "tournament"):
        assert draw(SamplerSpec(kind, 4), substream(1, 0)).n == 4
