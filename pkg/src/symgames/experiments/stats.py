"""Binomial z-scores, chi-square gate and pass/fail verdicts for support censuses."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from scipy import stats

from ..core import cardinality, format_set, subsets
from ..errors import TooFewTrials

if TYPE_CHECKING:
    from .census import SupportHistogram

MAX_DEGENERATE_RATE = 1e-4
MIN_CHI2_PVALUE = 1e-3


def support_probability(n: int, S: int) -> Fraction:
    """Predicted probability that the unique optimum has support ``S``."""
    return Fraction(1, 2 ** (n - 1)) if cardinality(S) % 2 else Fraction(0)


def binomial_z(hits: int, trials: int, p: Fraction) -> float:
    """Standardized deviation of ``hits`` from ``trials * p``.

    Degenerate ``p`` in {0, 1}: 0 on an exact match, infinite otherwise.
    """
    var = trials * p * (1 - p)
    diff = hits - trials * p
    if var == 0:
        return 0.0 if diff == 0 else math.copysign(math.inf, diff)
    return float(diff) / math.sqrt(var)


def wilson_interval(hits: int, trials: int, z: float) -> tuple[float, float]:
    if trials == 0:
        return 0.0, 1.0
    phat = hits / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class SupportRow:
    support: int
    cardinality: int
    count: int
    frequency: Fraction
    expected: Fraction
    z: float


@dataclass
class StatReport:
    n: int
    trials: int
    degenerate: int
    rows: list
    chi2: float
    chi2_pvalue: float
    even_violations: int
    z_threshold: float
    exact: bool
    passed: bool
    failures: list = field(default_factory=list)
    histogram: "SupportHistogram" = None

    @property
    def degenerate_rate(self) -> float:
        return self.degenerate / self.trials

    @property
    def max_abs_z(self) -> float:
        return max(abs(r.z) for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "degenerate": self.degenerate,
            "degenerate_rate": self.degenerate_rate,
            "chi2": self.chi2,
            "chi2_pvalue": self.chi2_pvalue,
            "even_violations": self.even_violations,
            "z_threshold": self.z_threshold,
            "exact": self.exact,
            "passed": self.passed,
            "failures": list(self.failures),
            "rows": [
                {
                    "support": r.support,
                    "set": format_set(r.support),
                    "cardinality": r.cardinality,
                    "count": r.count,
                    "frequency": r.frequency,
                    "expected": r.expected,
                    "z": r.z,
                }
                for r in self.rows
            ],
        }


def evaluate_census(
    hist: "SupportHistogram",
    z_threshold: float = 4.0,
    min_trials: int = 100,
    exact: bool = False,
    max_degenerate_rate: float = MAX_DEGENERATE_RATE,
) -> StatReport:
    """Compare a support histogram with the odd-support law.

    Fails on any bin with ``|z| > z_threshold``, any even support observed,
    a degenerate rate above ``max_degenerate_rate``, or a chi-square p-value
    over the odd bins below 0.001.  ``exact=True`` (exhaustive enumerations)
    instead demands every count equal its expectation exactly.
    """
    n, N = hist.n, hist.trials
    if N < min_trials:
        raise TooFewTrials(f"{N} trials, at least {min_trials} required")
    rows = []
    chi2 = 0.0
    odd_bins = 0
    for S in subsets(n):
        count = hist.counts.get(S, 0)
        p = support_probability(n, S)
        rows.append(SupportRow(S, cardinality(S), count, Fraction(count, N), p, binomial_z(count, N, p)))
        if p:
            odd_bins += 1
            e = float(N * p)
            chi2 += (count - e) ** 2 / e
    dof = odd_bins - 1
    pvalue = float(stats.chi2.sf(chi2, dof)) if dof > 0 else 1.0
    even = sum(r.count for r in rows if r.expected == 0)

    failures = []
    if even:
        failures.append(f"{even} draws with even-size support")
    if exact:
        bad = [r for r in rows if r.count != N * r.expected]
        if bad:
            failures.append(f"{len(bad)} supports differ from the exact count")
        if hist.degenerate:
            failures.append(f"{hist.degenerate} games without a unique optimum")
    else:
        over = [r for r in rows if r.expected and abs(r.z) > z_threshold]
        if over:
            failures.append(f"{len(over)} supports with |z| > {z_threshold}")
        if hist.degenerate / N > max_degenerate_rate:
            failures.append(f"degenerate rate {hist.degenerate / N:.2e} exceeds {max_degenerate_rate:.0e}")
        if pvalue <= MIN_CHI2_PVALUE:
            failures.append(f"chi-square p-value {pvalue:.2e} <= {MIN_CHI2_PVALUE}")
    return StatReport(
        n=n, trials=N, degenerate=hist.degenerate, rows=rows, chi2=chi2, chi2_pvalue=pvalue,
        even_violations=even, z_threshold=z_threshold, exact=exact, passed=not failures,
        failures=failures, histogram=hist,
    )
