"""Brute-force cross-validation and the named property checks behind ``verify``."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from enum import Enum

import numpy as np
from pydantic import BaseModel, Field

from ..config import COMPARISON_TOLERANCE, CORRECTION_TOLERANCE, NORM_TOLERANCE
from ..errors import TimebinAmpError
from ..fock.modes import FockBasis, mode
from ..fock.states import PureState
from ..optics.elements import apply_mode_map, beam_splitter_map
from ..protocol.circuit import build_circuit, evolved_branches
from ..protocol.correction import (
    FLIP_SITES,
    apply_correction,
    assignment_elements,
    correction_table,
)
from ..protocol.heralding import HeraldingIndex
from ..protocol.models import DetectorModel, ProtocolConfig
from ..protocol.runner import run_protocol
from .closed_form import (
    amplification_threshold,
    closed_eta_prime,
    closed_g,
    closed_max_p_total,
    closed_p1,
    closed_p2,
    closed_p_total,
)
from .sweep import t_grid

logger = logging.getLogger(__name__)

QUANTITIES = ("p1", "p2", "p_total", "eta_prime", "g")

COEFFICIENT_SET: tuple[tuple[float, float], ...] = (
    (1.0, 0.0),
    (0.0, 1.0),
    (1 / math.sqrt(2), 1 / math.sqrt(2)),
    (0.6, 0.8),
)


class GridName(str, Enum):
    QUICK = "quick"
    FULL = "full"


class VerificationGrid(BaseModel):
    etas: list[float]
    ts: list[float]
    coefficients: list[tuple[float, float]]

    @classmethod
    def named(cls, name: GridName | str) -> VerificationGrid:
        if GridName(name) is GridName.QUICK:
            ts = [0.1, 0.25, 0.5, 0.75, 0.9]
        else:
            ts = t_grid(0.05, 0.95, 0.05)
        return cls(etas=[0.2, 0.4, 0.8], ts=ts, coefficients=list(COEFFICIENT_SET))


class ComparisonReport(BaseModel):
    """Largest brute-force vs closed-form discrepancy per quantity."""

    points: int = 0
    max_errors: dict[str, float] = Field(default_factory=lambda: dict.fromkeys(QUANTITIES, 0.0))
    tolerance: float = COMPARISON_TOLERANCE
    first_failure: str | None = None

    @property
    def max_error(self) -> float:
        return max(self.max_errors.values(), default=0.0)

    @property
    def passed(self) -> bool:
        return self.first_failure is None


class CheckResult(BaseModel):
    name: str
    passed: bool
    max_error: float = 0.0
    detail: str = ""


class VerificationReport(BaseModel):
    grid: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)


def _error(a: float | None, b: float | None) -> float:
    if a is None or b is None:
        return 0.0 if a is None and b is None else math.inf
    return abs(a - b)


def verify_against_brute_force(
    eta_grid: Sequence[float],
    t_values: Sequence[float],
    alpha_beta_grid: Sequence[tuple[float, float]],
    tolerance: float = COMPARISON_TOLERANCE,
) -> ComparisonReport:
    """Run the protocol at every grid point and compare with the closed forms."""
    report = ComparisonReport(tolerance=tolerance)
    for alpha, beta in alpha_beta_grid:
        for eta in eta_grid:
            for t in t_values:
                result = run_protocol(ProtocolConfig(alpha=alpha, beta=beta, eta=eta, t=t))
                brute = {
                    "p1": result.p1,
                    "p2": result.p2,
                    "p_total": result.p_total,
                    "eta_prime": result.eta_out if result.fidelity_defined else None,
                    "g": result.g,
                }
                closed = {
                    "p1": closed_p1(t),
                    "p2": closed_p2(t),
                    "p_total": closed_p_total(eta, t),
                    "eta_prime": closed_eta_prime(eta, t),
                    "g": closed_g(eta, t),
                }
                report.points += 1
                for name in QUANTITIES:
                    err = _error(brute[name], closed[name])
                    report.max_errors[name] = max(report.max_errors[name], err)
                    if err > tolerance and report.first_failure is None:
                        report.first_failure = (
                            f"{name} at alpha={alpha!r} beta={beta!r} eta={eta!r} t={t!r}: "
                            f"brute={brute[name]!r} closed={closed[name]!r}"
                        )
    logger.info("Compared %d grid points, max error %.3e", report.points, report.max_error)
    return report


def _check(name: str, errors: list[tuple[float, str]], tolerance: float) -> CheckResult:
    """Fold (error, location) pairs into a CheckResult."""
    worst = max((e for e, _ in errors), default=0.0)
    failing = next((where for e, where in errors if not e <= tolerance), None)
    return CheckResult(
        name=name,
        passed=failing is None,
        max_error=worst,
        detail=f"first failure at {failing}" if failing else f"{len(errors)} cases",
    )


def check_element_isometry(grid: VerificationGrid) -> CheckResult:
    errors = []
    for t in [0.0, 1.0, *grid.ts]:
        for element in build_circuit(t):
            errors.append((element.isometry_error(), f"{element.name}"))
    for element in assignment_elements(tuple(range(len(FLIP_SITES)))):
        errors.append((element.isometry_error(), element.name))
    return _check("element-isometry", errors, NORM_TOLERANCE)


def check_hom_bunching(grid: VerificationGrid) -> CheckResult:
    bs = beam_splitter_map("x1", "x2", "y1", "y2")
    photons = PureState.single(mode("x1", "S", "H"), mode("x2", "S", "H"))
    out = apply_mode_map(photons, bs)
    coincidence = FockBasis.from_modes([mode("y1", "S", "H"), mode("y2", "S", "H")])
    expected = PureState.from_terms(
        [
            (FockBasis.from_counts({mode("y1", "S", "H"): 2}), 1 / math.sqrt(2)),
            (FockBasis.from_counts({mode("y2", "S", "H"): 2}), -1 / math.sqrt(2)),
        ]
    )
    errors = [
        (abs(out.amplitude(coincidence)), "coincidence amplitude"),
        (0.0 if out.isclose(expected) else math.inf, "bunched output"),
    ]
    return _check("hom-bunching", errors, 0.0)


def check_completeness(grid: VerificationGrid) -> CheckResult:
    errors = []
    for t in grid.ts:
        for branch_name, branch in zip(("entangled", "vacuum"), evolved_branches(0.6, 0.8, t)):
            index = HeraldingIndex(branch)
            for model in DetectorModel:
                total = math.fsum(index.distribution(model).values())
                errors.append((abs(total - 1.0), f"t={t!r} {branch_name} {model.value}"))
    return _check("completeness", errors, NORM_TOLERANCE)


def check_pattern_uniformity(grid: VerificationGrid) -> CheckResult:
    errors = []
    for t in grid.ts:
        result = run_protocol(ProtocolConfig(eta=0.5, t=t))
        for outcome in result.per_pattern:
            where = f"t={t!r} {outcome.pattern.name}"
            errors.append((abs(outcome.prob_entangled - t**3 * (1 - t) / 16), where))
            errors.append((abs(outcome.prob_vacuum - t**4 / 16), where))
    return _check("pattern-uniformity", errors, NORM_TOLERANCE)


def check_coefficient_independence(grid: VerificationGrid) -> CheckResult:
    errors = []
    for eta in grid.etas:
        for t in grid.ts:
            results = [
                run_protocol(ProtocolConfig(alpha=a, beta=b, eta=eta, t=t))
                for a, b in grid.coefficients
            ]
            spread = max(
                float(np.std([r.p1 for r in results])),
                float(np.std([r.p2 for r in results])),
                float(np.std([r.eta_out for r in results])),
            )
            errors.append((spread, f"eta={eta!r} t={t!r}"))
    return _check("coefficient-independence", errors, NORM_TOLERANCE)


def check_closed_form_agreement(grid: VerificationGrid) -> CheckResult:
    report = verify_against_brute_force(grid.etas, grid.ts, grid.coefficients)
    return CheckResult(
        name="closed-form-agreement",
        passed=report.passed,
        max_error=report.max_error,
        detail=report.first_failure or f"{report.points} points",
    )


def check_correction_table(grid: VerificationGrid) -> CheckResult:
    try:
        table = correction_table()
    except TimebinAmpError as e:
        return CheckResult(name="correction-table", passed=False, max_error=math.inf, detail=str(e))
    errors = [(0.0 if len(table) == 16 else math.inf, f"{len(table)} patterns")]
    entangled, _ = evolved_branches(0.6, 0.8, 0.5)
    index = HeraldingIndex(entangled)
    for pattern, flips in table.items():
        conditioned = index.postselect(pattern, DetectorModel.NUMBER_RESOLVING).conditioned
        if conditioned is None:
            errors.append((math.inf, pattern.name))
            continue
        elements = assignment_elements(flips)
        twice = apply_correction(apply_correction(conditioned, elements), elements)
        restored = all(a.isclose(b) for a, b in zip(twice.states, conditioned.states))
        errors.append((0.0 if restored else math.inf, f"{pattern.name} involution"))
    return _check("correction-table", errors, NORM_TOLERANCE)


def check_state_preservation(grid: VerificationGrid) -> CheckResult:
    errors = []
    for alpha, beta in grid.coefficients:
        for t in grid.ts:
            result = run_protocol(ProtocolConfig(alpha=alpha, beta=beta, eta=0.5, t=t))
            for outcome in result.per_pattern:
                fidelity = outcome.fidelity if outcome.fidelity is not None else 0.0
                errors.append(
                    (1.0 - fidelity, f"alpha={alpha!r} beta={beta!r} t={t!r} {outcome.pattern.name}")
                )
    return _check("state-preservation", errors, CORRECTION_TOLERANCE)


def check_crossover(grid: VerificationGrid) -> CheckResult:
    threshold = amplification_threshold()
    errors = []
    for eta in grid.etas:
        for t in sorted({0.499, 0.5, 0.501, *grid.ts}):
            g = closed_g(eta, t)
            where = f"eta={eta!r} t={t!r} g={g!r}"
            if g is None:
                errors.append((math.inf, where))
            elif t == threshold:
                errors.append((abs(g - 1.0), where))
            else:
                ok = (g > 1.0) == (t < threshold) and g != 1.0
                errors.append((0.0 if ok else math.inf, where))
    return _check("crossover", errors, NORM_TOLERANCE)


def check_monotonicity(grid: VerificationGrid) -> CheckResult:
    ts = t_grid(0.01, 0.99, 0.01)
    errors = []
    for eta in grid.etas:
        for name, fn in (("g", closed_g), ("eta_prime", closed_eta_prime)):
            values = np.array([fn(eta, t) for t in ts], dtype=float)
            increasing = np.flatnonzero(np.diff(values) >= 0.0)
            where = f"eta={eta!r} {name}"
            if increasing.size:
                where += f" at t={ts[int(increasing[0])]!r}"
            errors.append((0.0 if increasing.size == 0 else math.inf, where))
    return _check("monotonicity", errors, 0.0)


def check_limits(grid: VerificationGrid) -> CheckResult:
    t = 1e-6
    errors = []
    for eta in grid.etas:
        eta_prime = closed_eta_prime(eta, t)
        g = closed_g(eta, t)
        errors.append((abs(eta_prime - 1.0) if eta_prime is not None else math.inf, f"eta'({eta!r})"))
        errors.append((abs(g - 1 / eta) * eta if g is not None else math.inf, f"g({eta!r})"))
    return _check("limits", errors, 1e-4)


def check_p_total_maximum(grid: VerificationGrid) -> CheckResult:
    errors = []
    dense = t_grid(0.0, 0.5, 0.001)
    for eta in grid.etas:
        t_best, value = closed_max_p_total(eta, 0.5)
        errors.append((abs(t_best - 0.5) + abs(value - 1 / 16), f"eta={eta!r} closed"))
        scanned = max(closed_p_total(eta, t) for t in dense)
        errors.append((max(scanned - value, 0.0), f"eta={eta!r} scan"))
        brute = run_protocol(ProtocolConfig(eta=eta, t=0.5)).p_total
        errors.append((abs(brute - 1 / 16), f"eta={eta!r} brute"))
    return _check("p-total-maximum", errors, 1e-12)


def check_threshold_degradation(grid: VerificationGrid) -> CheckResult:
    resolving = run_protocol(ProtocolConfig(eta=0.5, t=0.25))
    threshold = run_protocol(
        ProtocolConfig(eta=0.5, t=0.25, detector_model=DetectorModel.THRESHOLD)
    )
    errors = []
    for outcome in threshold.per_pattern:
        gain = outcome.prob_entangled - resolving.lookup(outcome.pattern).prob_entangled
        errors.append((0.0 if gain > 0.0 else math.inf, f"{outcome.pattern.name} probability"))
    fidelity = threshold.output_fidelity
    errors.append((0.0 if fidelity is not None and fidelity < 1.0 else math.inf, "output fidelity"))
    return _check("threshold-degradation", errors, 0.0)


CHECKS: dict[str, Callable[[VerificationGrid], CheckResult]] = {
    "element-isometry": check_element_isometry,
    "hom-bunching": check_hom_bunching,
    "completeness": check_completeness,
    "pattern-uniformity": check_pattern_uniformity,
    "coefficient-independence": check_coefficient_independence,
    "closed-form-agreement": check_closed_form_agreement,
    "correction-table": check_correction_table,
    "state-preservation": check_state_preservation,
    "crossover": check_crossover,
    "monotonicity": check_monotonicity,
    "limits": check_limits,
    "p-total-maximum": check_p_total_maximum,
    "threshold-degradation": check_threshold_degradation,
}


def run_checks(grid: GridName | str = GridName.QUICK, names: Sequence[str] | None = None) -> VerificationReport:
    """Run the named checks (all by default) on a verification grid."""
    spec = VerificationGrid.named(grid)
    report = VerificationReport(grid=GridName(grid).value)
    for name in names or CHECKS:
        try:
            result = CHECKS[name](spec)
        except TimebinAmpError as e:
            result = CheckResult(name=name, passed=False, max_error=math.inf, detail=str(e))
        logger.info("%s: %s (max error %.3e)", name, "pass" if result.passed else "FAIL", result.max_error)
        report.checks.append(result)
    return report
