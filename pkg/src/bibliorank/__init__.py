"""Percentile-based citation impact indicators and paradox detection."""

__version__ = "0.1.0"

from .core import (
    INDICATORS,
    CitationDistribution,
    IndicatorRow,
    IndicatorTable,
    RankAssignment,
    UncertaintyInterval,
    assign_ranks,
    build_distribution,
    class_report,
    indicator_means,
    indicator_table,
    interval,
    p100,
    p100_double_prime,
    p100_prime,
    piic,
    piic_and_incites,
    ppag,
    prou,
)
from .estimator import CitationPercentileTransformer
from .exceptions import BiblioRankError, DegenerateDistribution
from .scenario import (
    Mutation,
    ParadoxReport,
    Scenario,
    analyze_scenario,
    apply_mutation,
    detect_counterintuitive,
    detect_interval_escapes,
    p100pp_improvement_check,
    run_scenario,
)
