from .census import (
    ConditionalResult,
    ExperimentConfig,
    FrequencyResult,
    SupportHistogram,
    run_census,
    run_conditional,
    run_totally_mixed,
    tournament_census_exact,
    two_by_two_census,
)
from .report import write_report
from .stats import StatReport, evaluate_census

__all__ = [
    "ConditionalResult",
    "ExperimentConfig",
    "FrequencyResult",
    "StatReport",
    "SupportHistogram",
    "evaluate_census",
    "run_census",
    "run_conditional",
    "run_totally_mixed",
    "tournament_census_exact",
    "two_by_two_census",
    "write_report",
]
