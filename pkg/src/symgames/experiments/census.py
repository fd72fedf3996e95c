"""Seeded Monte Carlo and exhaustive censuses of optimal-strategy supports.

Trial ``t`` always draws its game from ``substream(seed, t)``; work is split
into contiguous trial ranges whose partial counts are merged by addition, so
results do not depend on the number of workers.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from ..core import cardinality, full_set, support
from ..errors import ConditioningEmpty, GameError, TooFewTrials
from ..sampling import RandomStream, SamplerSpec, all_tournaments, draw, substream
from ..solver import analyze, has_optimal_with_support, solve_bimatrix_zero_sum, subgame_totally_mixed
from .stats import StatReport, binomial_z, evaluate_census, wilson_interval


@dataclass(frozen=True)
class ExperimentConfig:
    sampler: SamplerSpec
    trials: int
    seed: int = 1
    workers: int = 1
    conditioning: Optional[int] = None
    z_threshold: float = 4.0
    min_trials: int = 100

    def __post_init__(self):
        if self.trials < 1:
            raise GameError("trials must be positive")
        if self.workers < 1:
            raise GameError("workers must be positive")
        if self.conditioning is not None and (self.conditioning < 0 or self.conditioning >> self.sampler.n):
            raise GameError("conditioning set is not within the action set")

    def to_dict(self) -> dict:
        d = {
            "sampler": self.sampler.to_dict(),
            "trials": self.trials,
            "seed": self.seed,
            "z_threshold": self.z_threshold,
            "min_trials": self.min_trials,
        }
        if self.conditioning is not None:
            d["conditioning"] = self.conditioning
        return d


@dataclass
class SupportHistogram:
    """Counts of unique-optimum supports; non-unique draws go to ``degenerate``."""

    n: int
    counts: dict = field(default_factory=dict)
    trials: int = 0
    degenerate: int = 0
    sampler: Optional[dict] = None
    seed: Optional[int] = None

    def frequency(self, S: int) -> Fraction:
        return Fraction(self.counts.get(S, 0), self.trials)

    def by_cardinality(self) -> dict:
        out = {k: 0 for k in range(1, self.n + 1)}
        for S, c in self.counts.items():
            out[cardinality(S)] += c
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "degenerate": self.degenerate,
            "counts": {str(S): c for S, c in sorted(self.counts.items())},
            "sampler": self.sampler,
            "seed": self.seed,
        }


# -- trial scheduling ---------------------------------------------------------

def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    if workers == 1:
        return [(0, trials)]
    size = max(1, math.ceil(trials / (4 * workers)))
    return [(a, min(a + size, trials)) for a in range(0, trials, size)]


def _run_chunked(fn: Callable, config: ExperimentConfig, *extra) -> list:
    chunks = _chunks(config.trials, config.workers)
    if config.workers == 1:
        return [fn(config.sampler, config.seed, a, b, *extra) for a, b in chunks]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(fn, config.sampler, config.seed, a, b, *extra) for a, b in chunks]
        return [f.result() for f in futures]


def _census_chunk(spec: SamplerSpec, seed: int, start: int, stop: int):
    counts = Counter()
    degenerate = 0
    for t in range(start, stop):
        G = draw(spec, substream(seed, t))
        try:
            r = analyze(G)
        except GameError as exc:
            raise GameError(f"trial {t} (seed {seed}): {exc}") from exc
        if r.unique:
            counts[support(r.strategy)] += 1
        else:
            degenerate += 1
    return counts, degenerate


def run_census(config: ExperimentConfig) -> SupportHistogram:
    """Support histogram of the unique optimal strategy over ``config.trials`` draws."""
    total = Counter()
    degenerate = 0
    for counts, deg in _run_chunked(_census_chunk, config):
        total.update(counts)
        degenerate += deg
    return SupportHistogram(
        n=config.sampler.n,
        counts=dict(sorted(total.items())),
        trials=config.trials,
        degenerate=degenerate,
        sampler=config.sampler.to_dict(),
        seed=config.seed,
    )


# -- totally mixed and conditional frequencies --------------------------------

@dataclass
class FrequencyResult:
    """An observed frequency checked against its predicted probability."""

    name: str
    hits: int
    trials: int
    expected: Fraction
    z_threshold: float
    degenerate: int = 0

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.hits, self.trials)

    @property
    def z(self) -> float:
        return binomial_z(self.hits, self.trials, self.expected)

    @property
    def ci(self) -> tuple[float, float]:
        return wilson_interval(self.hits, self.trials, self.z_threshold)

    @property
    def passed(self) -> bool:
        return abs(self.z) <= self.z_threshold

    def to_dict(self) -> dict:
        lo, hi = self.ci
        return {
            "name": self.name,
            "hits": self.hits,
            "trials": self.trials,
            "degenerate": self.degenerate,
            "frequency": self.frequency,
            "expected": self.expected,
            "z": self.z,
            "ci": [lo, hi],
            "passed": self.passed,
        }


def _totally_mixed_chunk(spec: SamplerSpec, seed: int, start: int, stop: int):
    full = full_set(spec.n)
    hits = degenerate = 0
    for t in range(start, stop):
        r = analyze(draw(spec, substream(seed, t)))
        if not r.unique:
            degenerate += 1
        elif support(r.strategy) == full:
            hits += 1
    return hits, degenerate


def run_totally_mixed(config: ExperimentConfig) -> FrequencyResult:
    """Frequency of draws whose unique optimal strategy uses every action."""
    n = config.sampler.n
    hits = degenerate = 0
    for h, d in _run_chunked(_totally_mixed_chunk, config):
        hits += h
        degenerate += d
    expected = Fraction(0) if n % 2 == 0 else Fraction(1, 2 ** (n - 1))
    return FrequencyResult("totally-mixed", hits, config.trials, expected, config.z_threshold, degenerate)


@dataclass
class ConditionalResult:
    S: int
    n: int
    trials: int
    conditioned: int
    hits: int
    z_threshold: float

    @property
    def conditional(self) -> FrequencyResult:
        k = cardinality(self.S)
        return FrequencyResult("conditional", self.hits, self.conditioned,
                               Fraction(1, 2 ** (self.n - k)), self.z_threshold)

    @property
    def conditioning(self) -> FrequencyResult:
        k = cardinality(self.S)
        expected = Fraction(1, 2 ** (k - 1)) if k % 2 else Fraction(0)
        return FrequencyResult("conditioning-rate", self.conditioned, self.trials, expected, self.z_threshold)

    @property
    def passed(self) -> bool:
        return self.conditional.passed and self.conditioning.passed

    def to_dict(self) -> dict:
        return {
            "set": self.S,
            "n": self.n,
            "trials": self.trials,
            "conditioned": self.conditioned,
            "hits": self.hits,
            "conditional": self.conditional.to_dict(),
            "conditioning_rate": self.conditioning.to_dict(),
            "passed": self.passed,
        }


def _conditional_chunk(spec: SamplerSpec, seed: int, start: int, stop: int, S: int):
    conditioned = hits = 0
    for t in range(start, stop):
        G = draw(spec, substream(seed, t))
        if subgame_totally_mixed(G, S):
            conditioned += 1
            if has_optimal_with_support(G, S):
                hits += 1
    return conditioned, hits


def run_conditional(config: ExperimentConfig) -> ConditionalResult:
    """Among draws whose subgame on ``S`` has a totally mixed optimum, the
    fraction having an optimal strategy with support exactly ``S``."""
    S = config.conditioning
    if not S:
        raise GameError("conditional run needs a nonempty conditioning set")
    conditioned = hits = 0
    for c, h in _run_chunked(_conditional_chunk, config, S):
        conditioned += c
        hits += h
    if conditioned == 0:
        raise ConditioningEmpty(f"no trial satisfied the conditioning event (|S| = {cardinality(S)})")
    return ConditionalResult(S, config.sampler.n, config.trials, conditioned, hits, config.z_threshold)


# -- exhaustive tournaments ------------------------------------------------------

def tournament_census_exact(n: int) -> tuple[SupportHistogram, StatReport]:
    """Solve every tournament on ``n`` actions and compare with the exact law."""
    counts = Counter()
    degenerate = trials = 0
    for G in all_tournaments(n):
        trials += 1
        r = analyze(G)
        if r.unique:
            counts[support(r.strategy)] += 1
        else:
            degenerate += 1
    hist = SupportHistogram(
        n=n,
        counts=dict(sorted(counts.items())),
        trials=trials,
        degenerate=degenerate,
        sampler={"kind": "all-tournaments", "n": n},
        seed=None,
    )
    return hist, evaluate_census(hist, exact=True, min_trials=1)


# -- 2x2 general zero-sum games ---------------------------------------------------

TWO_BY_TWO_CHUNK = 10_000
MIN_TWO_BY_TWO_TRIALS = 10_000


def _two_by_two_chunk(seed: int, chunk: int, count: int) -> int:
    rng = RandomStream(seed, (chunk,)).rng
    mags = np.abs(rng.standard_normal((count, 4)))
    signs = rng.integers(0, 2, size=(count, 4))
    vals = np.where(signs == 1, -mags, mags)
    a, b, c, d = vals.T
    # Float comparisons are exact.  With four distinct entries the row player's
    # optimum is unique; it is interior iff the game has no saddle point.
    maximin = np.maximum(np.minimum(a, b), np.minimum(c, d))
    minimax = np.minimum(np.maximum(a, c), np.maximum(b, d))
    s = np.sort(vals, axis=1)
    tied = (s[:, 1:] == s[:, :-1]).any(axis=1)
    full = int(np.count_nonzero(~tied & (maximin < minimax)))
    for m, sg in zip(mags[tied].tolist(), signs[tied].tolist()):
        a, b, c, d = (-Fraction(x) if k else Fraction(x) for x, k in zip(m, sg))
        _, row, _ = solve_bimatrix_zero_sum(((a, b), (c, d)))
        if row[0] > 0 and row[1] > 0:
            full += 1
    return full


def two_by_two_census(trials: int, seed: int, workers: int = 1, z_threshold: float = 4.0) -> FrequencyResult:
    """Frequency with which the row player of a random 2x2 zero-sum game has a
    full-support optimal strategy (entries: fair sign times |standard normal|)."""
    if trials < MIN_TWO_BY_TWO_TRIALS:
        raise TooFewTrials(f"two-by-two census needs at least {MIN_TWO_BY_TWO_TRIALS} trials")
    jobs = []
    for chunk, start in enumerate(range(0, trials, TWO_BY_TWO_CHUNK)):
        jobs.append((seed, chunk, min(TWO_BY_TWO_CHUNK, trials - start)))
    if workers == 1:
        full = sum(_two_by_two_chunk(*job) for job in jobs)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            full = sum(pool.map(_two_by_two_chunk, *zip(*jobs)))
    return FrequencyResult("two-by-two-full-support", full, trials, Fraction(1, 3), z_threshold)
