"""Parameter sweeps over (eta, t) for the gain, fidelity and success curves."""

from __future__ import annotations

import asyncio
import logging
from enum import Enum

import numpy as np
from pydantic import BaseModel, Field

from ..config import get_config
from ..errors import DomainError
from ..protocol.models import ProtocolConfig
from ..protocol.runner import run_protocol
from .closed_form import closed_eta_prime, closed_g, closed_p1, closed_p2, closed_p_total

logger = logging.getLogger(__name__)


class SweepSource(str, Enum):
    CLOSED_FORM = "closed"
    BRUTE_FORCE = "brute"


class SweepRow(BaseModel):
    """One point of the plotted curves."""

    eta: float = Field(..., ge=0.0, le=1.0)
    t: float = Field(..., ge=0.0, le=1.0)
    p1: float = Field(..., ge=0.0, le=1.0)
    p2: float = Field(..., ge=0.0, le=1.0)
    p_total: float = Field(..., ge=0.0, le=1.0)
    eta_prime: float | None = None
    g: float | None = Field(None, ge=0.0)
    source: SweepSource


def t_grid(t_min: float, t_max: float, t_step: float) -> list[float]:
    """Inclusive grid t_min, t_min + t_step, ... <= t_max, rounded to 12 decimals."""
    if t_step <= 0.0:
        raise DomainError(f"t-step must be positive, got {t_step}")
    if not 0.0 <= t_min <= t_max <= 1.0:
        raise DomainError(f"Need 0 <= t-min <= t-max <= 1, got {t_min}, {t_max}")
    count = int(np.floor((t_max - t_min) / t_step + 1e-9)) + 1
    steps = t_min + t_step * np.arange(count)
    return [round(float(t), 12) for t in steps]


def evaluate_point(eta: float, t: float, source: SweepSource = SweepSource.CLOSED_FORM) -> SweepRow:
    """One sweep row from the closed forms or a full protocol run."""
    source = SweepSource(source)
    if source is SweepSource.CLOSED_FORM:
        return SweepRow(
            eta=eta,
            t=t,
            p1=closed_p1(t),
            p2=closed_p2(t),
            p_total=closed_p_total(eta, t),
            eta_prime=closed_eta_prime(eta, t),
            g=closed_g(eta, t),
            source=source,
        )
    result = run_protocol(ProtocolConfig(eta=eta, t=t))
    return SweepRow(
        eta=eta,
        t=t,
        p1=result.p1,
        p2=result.p2,
        p_total=result.p_total,
        eta_prime=result.eta_out if result.fidelity_defined else None,
        g=result.g,
        source=source,
    )


async def sweep_async(
    eta_list: list[float],
    t_values: list[float],
    source: SweepSource = SweepSource.CLOSED_FORM,
    max_threads: int | None = None,
) -> list[SweepRow]:
    """Evaluate the grid concurrently; rows come back in (eta, t) order."""
    for eta in eta_list:
        if not 0.0 <= eta <= 1.0:
            raise DomainError(f"eta must be in [0, 1], got {eta}")
    limit = max_threads or get_config().max_threads
    semaphore = asyncio.Semaphore(max(1, limit))
    points = [(eta, t) for eta in sorted(eta_list) for t in sorted(t_values)]
    logger.info("Sweeping %d points (%s, %d workers)", len(points), SweepSource(source).value, limit)

    async def _evaluate(eta: float, t: float) -> SweepRow:
        async with semaphore:
            return await asyncio.to_thread(evaluate_point, eta, t, source)

    return list(await asyncio.gather(*(_evaluate(eta, t) for eta, t in points)))


def sweep(
    eta_list: list[float],
    t_values: list[float],
    source: SweepSource = SweepSource.CLOSED_FORM,
    max_threads: int | None = None,
) -> list[SweepRow]:
    """Synchronous wrapper around :func:`sweep_async`."""
    return asyncio.run(sweep_async(eta_list, t_values, source, max_threads))
