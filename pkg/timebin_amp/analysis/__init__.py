"""Closed forms, sweeps and brute-force verification.

Functions:
    closed_p1, closed_p2, closed_p_total, closed_eta_prime, closed_g: Analytic curves
    sweep, sweep_async: Evaluate a (eta, t) grid in order
    verify_against_brute_force: Compare protocol runs with the closed forms
    run_checks: The named property suite behind ``timebin-amp verify``
"""

from .closed_form import (
    amplification_threshold,
    closed_eta_prime,
    closed_g,
    closed_max_p_total,
    closed_p1,
    closed_p2,
    closed_p_total,
)
from .sweep import SweepRow, SweepSource, evaluate_point, sweep, sweep_async, t_grid
from .verification import (
    CHECKS,
    CheckResult,
    ComparisonReport,
    GridName,
    VerificationGrid,
    VerificationReport,
    run_checks,
    verify_against_brute_force,
)

__all__ = [
    "amplification_threshold",
    "closed_eta_prime",
    "closed_g",
    "closed_max_p_total",
    "closed_p1",
    "closed_p2",
    "closed_p_total",
    "SweepRow",
    "SweepSource",
    "evaluate_point",
    "sweep",
    "sweep_async",
    "t_grid",
    "CHECKS",
    "CheckResult",
    "ComparisonReport",
    "GridName",
    "VerificationGrid",
    "VerificationReport",
    "run_checks",
    "verify_against_brute_force",
]
