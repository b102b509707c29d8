"""Detector click records, success patterns and post-selection."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from ..fock.modes import FockBasis
from ..fock.states import MixedState, PureState
from .circuit import DETECTORS, OUTPUT_PATHS
from .models import ALLOWED_PAIRS, DetectionPattern, DetectorModel, Side

logger = logging.getLogger(__name__)

# Photon counts per detector, in DETECTORS order (D1a..D4a, D1b..D4b).
ClickRecord = tuple[int, ...]

_CHANNELS = {(d.spatial, d.pol): i for i, d in enumerate(DETECTORS)}


def success_patterns() -> list[DetectionPattern]:
    """The sixteen heralding patterns, side a varying slowest."""
    return [
        DetectionPattern(side_a=a, side_b=b)
        for a, b in itertools.product(ALLOWED_PAIRS, ALLOWED_PAIRS)
    ]


def detector_counts(basis: FockBasis) -> ClickRecord:
    """Photons seen by each detector; both time bins count toward one click."""
    counts = [0] * len(DETECTORS)
    for m, n in basis.occupations:
        index = _CHANNELS.get((m.spatial, m.pol))
        if index is not None:
            counts[index] += n
    return tuple(counts)


@lru_cache(maxsize=64)
def pattern_record(pattern: DetectionPattern) -> ClickRecord:
    """Click record of exactly one photon at each of the pattern's detectors."""
    wanted = {(Side.A, i) for i in pattern.side_a} | {(Side.B, i) for i in pattern.side_b}
    return tuple(1 if (d.side, d.index) in wanted else 0 for d in DETECTORS)


def matches(record: ClickRecord, pattern: DetectionPattern, model: DetectorModel) -> bool:
    """Whether a click record heralds the pattern under a detector model."""
    target = pattern_record(pattern)
    if model is DetectorModel.NUMBER_RESOLVING:
        return record == target
    return all((n >= 1) if want else (n == 0) for n, want in zip(record, target))


def reported_record(record: ClickRecord, model: DetectorModel) -> ClickRecord:
    """What the detectors report: exact counts, or click/no-click."""
    if model is DetectorModel.NUMBER_RESOLVING:
        return record
    return tuple(min(n, 1) for n in record)


@dataclass(frozen=True)
class PostSelection:
    """Heralding probability and the normalised output state it leaves behind."""

    probability: float
    conditioned: MixedState | None

    @property
    def succeeded(self) -> bool:
        return self.conditioned is not None

    @property
    def conditioned_pure(self) -> PureState | None:
        """The conditioned state when it is pure, else None."""
        if self.conditioned is None:
            return None
        merged = self.conditioned.merged()
        return merged.states[0] if len(merged) == 1 else None


class HeraldingIndex:
    """Output-mode states grouped by the detector-mode part of each term.

    Terms that differ on detector modes are orthogonal after measurement, so
    each group is an unnormalised pure state on out1/out2 and a heralding
    outcome is an incoherent sum over the groups it accepts.
    """

    __slots__ = ("_groups", "_records")

    def __init__(self, state: PureState) -> None:
        terms: dict[FockBasis, list[tuple[FockBasis, complex]]] = {}
        for basis, amp in state.items():
            detected = basis.exclude(OUTPUT_PATHS)
            terms.setdefault(detected, []).append((basis.restrict(OUTPUT_PATHS), amp))
        self._groups: Mapping[FockBasis, PureState] = MappingProxyType(
            {k: PureState.from_terms(v) for k, v in terms.items()}
        )
        self._records = {k: detector_counts(k) for k in self._groups}

    @property
    def groups(self) -> Mapping[FockBasis, PureState]:
        return self._groups

    def __len__(self) -> int:
        return len(self._groups)

    def select(self, pattern: DetectionPattern, model: DetectorModel) -> list[PureState]:
        return [
            self._groups[k]
            for k, record in self._records.items()
            if matches(record, pattern, model)
        ]

    def postselect(self, pattern: DetectionPattern, model: DetectorModel) -> PostSelection:
        kept = [s for s in self.select(pattern, model) if not s.is_zero]
        probability = math.fsum(s.norm_squared() for s in kept)
        if probability == 0.0:
            return PostSelection(0.0, None)
        conditioned = MixedState.from_unnormalized((1.0, s) for s in kept)
        return PostSelection(probability, conditioned)

    def distribution(self, model: DetectorModel) -> dict[ClickRecord, float]:
        """Probability of every click record the detectors can report."""
        buckets: dict[ClickRecord, list[float]] = {}
        for key, state in self._groups.items():
            record = reported_record(self._records[key], model)
            buckets.setdefault(record, []).append(state.norm_squared())
        return {record: math.fsum(ps) for record, ps in sorted(buckets.items())}


def postselect(
    state: PureState,
    pattern: DetectionPattern,
    model: DetectorModel = DetectorModel.NUMBER_RESOLVING,
) -> PostSelection:
    """Condition a circuit output on one detection pattern."""
    result = HeraldingIndex(state).postselect(pattern, model)
    logger.debug("%s (%s): p=%r", pattern.name, model.value, result.probability)
    return result


def outcome_distribution(
    state: PureState, model: DetectorModel = DetectorModel.NUMBER_RESOLVING
) -> dict[ClickRecord, float]:
    """Probabilities over all detector outcomes, heralding or not."""
    return HeraldingIndex(state).distribution(model)
