"""Seeded random games from symmetric, regular distributions.

Every trial draws from its own stream derived from ``(seed, trial_index)``
with numpy's :class:`~numpy.random.SeedSequence` spawn keys feeding a Philox
counter-based generator, so trials can run in any order or process.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .core import SkewGame, flip, from_upper
from .errors import GameError, TooLarge

GENERATOR_NAME = "numpy.random.Philox(SeedSequence(seed, spawn_key=path))"

KINDS = ("odd-int", "gaussian", "uniform", "tournament", "symmetrized", "constant")
MAX_TOURNAMENT_N = 7


class RandomStream:
    """Deterministic random source identified by a root seed and a path."""

    def __init__(self, seed: int, path: tuple = ()):
        self.seed = int(seed)
        self.path = tuple(int(k) for k in path)
        ss = np.random.SeedSequence(self.seed, spawn_key=self.path)
        self.rng = np.random.Generator(np.random.Philox(ss))

    def signs(self, size: int) -> list[int]:
        """Independent fair +1/-1 draws."""
        return (1 - 2 * self.rng.integers(0, 2, size=size)).tolist()

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, path={self.path})"


def substream(seed: int, trial_index: int) -> RandomStream:
    return RandomStream(seed, (trial_index,))


def _upper_size(n: int) -> int:
    return n * (n - 1) // 2


def odd_int_game(n: int, bound: int, stream: RandomStream) -> SkewGame:
    """Upper-triangle entries uniform on the odd integers of absolute value at most ``2*bound + 1``."""
    if bound < 0:
        raise GameError("bound must be nonnegative")
    m = _upper_size(n)
    mags = stream.rng.integers(0, bound + 1, size=m).tolist()
    signs = stream.signs(m)
    return from_upper(n, [s * (2 * k + 1) for s, k in zip(signs, mags)])


def gaussian_game(n: int, stream: RandomStream) -> SkewGame:
    """Upper-triangle entries are a fair sign times the magnitude of a standard normal.

    Each double is converted to the rational it denotes, without rounding.
    """
    m = _upper_size(n)
    mags = np.abs(stream.rng.standard_normal(m)).tolist()
    signs = stream.signs(m)
    return from_upper(n, [Fraction(x) if s > 0 else -Fraction(x) for s, x in zip(signs, mags)])


def uniform_game(n: int, half_width, stream: RandomStream) -> SkewGame:
    """Upper-triangle entries are a fair sign times a uniform magnitude on ``[0, half_width]``."""
    w = Fraction(half_width)
    if w <= 0:
        raise GameError("half-width must be positive")
    m = _upper_size(n)
    mags = stream.rng.random(m).tolist()
    signs = stream.signs(m)
    return from_upper(n, [s * w * Fraction(x) for s, x in zip(signs, mags)])


def tournament_game(n: int, stream: RandomStream) -> SkewGame:
    return from_upper(n, stream.signs(_upper_size(n)))


def random_flip_set(n: int, stream: RandomStream) -> int:
    """Uniformly random subset of the actions, as a bitmask."""
    bits = stream.rng.integers(0, 2, size=n).tolist()
    return sum(b << i for i, b in enumerate(bits))


def all_tournaments(n: int) -> Iterator[SkewGame]:
    """Every tournament game on ``n`` actions exactly once.

    Order: counting over the upper triangle (row-major, first entry most
    significant) with digit 0 meaning +1 and digit 1 meaning -1.
    """
    if n < 1:
        raise GameError("n must be positive")
    if n > MAX_TOURNAMENT_N:
        raise TooLarge(f"enumerating tournaments is capped at n={MAX_TOURNAMENT_N}")
    for values in itertools.product((1, -1), repeat=_upper_size(n)):
        yield from_upper(n, values)


@dataclass(frozen=True)
class SamplerSpec:
    """Distribution of games: a kind plus its parameters.

    ``symmetrized`` wraps ``base``: it draws from the base and then applies a
    uniformly random sign flip.  ``constant`` always returns ``game``.
    """

    kind: str
    n: int
    bound: int = 4
    half_width: Fraction = Fraction(1)
    base: Optional["SamplerSpec"] = None
    game: Optional[SkewGame] = field(default=None, compare=True)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GameError(f"unknown sampler kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 1:
            raise GameError("n must be at least 1")
        if self.bound < 0:
            raise GameError("bound must be nonnegative")
        object.__setattr__(self, "half_width", Fraction(self.half_width))
        if self.half_width <= 0:
            raise GameError("half-width must be positive")
        if self.kind == "symmetrized":
            if self.base is None:
                raise GameError("symmetrized sampler needs a base sampler")
            if self.base.n != self.n:
                raise GameError("base sampler has a different action count")
        if self.kind == "constant":
            if self.game is None:
                raise GameError("constant sampler needs a game")
            if self.game.n != self.n:
                raise GameError("constant game has a different action count")

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "n": self.n}
        if self.kind == "odd-int":
            d["bound"] = self.bound
        elif self.kind == "uniform":
            d["half_width"] = str(self.half_width)
        elif self.kind == "symmetrized":
            d["base"] = self.base.to_dict()
        elif self.kind == "constant":
            d["upper"] = [str(x) for x in self.game.upper()]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SamplerSpec":
        kind = d["kind"]
        n = int(d["n"])
        kw = {}
        if "bound" in d:
            kw["bound"] = int(d["bound"])
        if "half_width" in d:
            kw["half_width"] = Fraction(d["half_width"])
        if kind == "symmetrized":
            kw["base"] = cls.from_dict(d["base"])
        if kind == "constant":
            kw["game"] = from_upper(n, [Fraction(x) for x in d["upper"]])
        return cls(kind, n, **kw)


def draw(spec: SamplerSpec, stream: RandomStream) -> SkewGame:
    """One game from ``spec`` using ``stream``."""
    kind = spec.kind
    if kind == "odd-int":
        return odd_int_game(spec.n, spec.bound, stream)
    if kind == "gaussian":
        return gaussian_game(spec.n, stream)
    if kind == "uniform":
        return uniform_game(spec.n, spec.half_width, stream)
    if kind == "tournament":
        return tournament_game(spec.n, stream)
    if kind == "constant":
        return spec.game
    G = draw(spec.base, stream)
    return flip(G, random_flip_set(spec.n, stream))


def symmetrized(base: SamplerSpec) -> SamplerSpec:
    return SamplerSpec("symmetrized", base.n, base=base)


def sample(spec: SamplerSpec, seed: int, trial_index: int) -> SkewGame:
    return draw(spec, substream(seed, trial_index))
