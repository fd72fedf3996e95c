"""Exact solver and support-distribution experiments for symmetric zero-sum games."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    SkewGame,
    action_set,
    expected_payoff,
    flip,
    flip_vec,
    from_upper,
    make_game,
    matvec,
    members,
    neg_support,
    restrict,
    restrict_vec,
    support,
)
from .solver import SolveReport, analyze, has_optimal_with_support, some_optimal  # noqa: E402

__all__ = [
    "SkewGame", "action_set", "expected_payoff", "flip", "flip_vec", "from_upper", "make_game",
    "matvec", "members", "neg_support", "restrict", "restrict_vec", "support",
    "SolveReport", "analyze", "has_optimal_with_support", "some_optimal",
]
