"""Phase-flip corrections that map every heralded output onto the ideal state.

The correction for each pattern is discovered by search rather than tabulated:
all sixteen ways of flipping the sign of the S_H and/or L_V component of out1
and/or out2 are tried on the heralded entangled-branch output, and exactly one
assignment (together with its complement, which differs by a global phase)
must restore the ideal state.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Mapping
from functools import lru_cache
from types import MappingProxyType

from ..config import CORRECTION_TOLERANCE
from ..errors import CorrectionNotFoundError
from ..fock.modes import FockBasis, mode
from ..fock.states import MixedState, PureState
from ..optics.elements import Component, LinearModeMap, apply_elements, phase_flip_map
from .circuit import check_coefficients, evolved_branches
from .heralding import HeraldingIndex, success_patterns
from .models import DetectionPattern, DetectorModel, Side

logger = logging.getLogger(__name__)

# Flip order used for tie-breaking between equally small assignments.
FLIP_SITES: tuple[tuple[str, Component], ...] = (
    (Side.A.out_mode, Component.S_H),
    (Side.A.out_mode, Component.L_V),
    (Side.B.out_mode, Component.S_H),
    (Side.B.out_mode, Component.L_V),
)

# Generic coefficients so that S_H and L_V flips are distinguishable.
DISCOVERY_T = 0.5
DISCOVERY_ALPHA = 0.6
DISCOVERY_BETA = 0.8


def ideal_output(alpha: complex, beta: complex) -> PureState:
    """(|psi>_out1 |0>_out2 + |0>_out1 |psi>_out2)/sqrt2 with |psi> = alpha|S_H> + beta|L_V>."""
    check_coefficients(alpha, beta)
    terms = []
    for spatial in (Side.A.out_mode, Side.B.out_mode):
        terms.append((FockBasis.from_modes([mode(spatial, "S", "H")]), alpha / math.sqrt(2)))
        terms.append((FockBasis.from_modes([mode(spatial, "L", "V")]), beta / math.sqrt(2)))
    return PureState.from_terms(terms)


def flip_label(spatial: str, component: Component) -> str:
    return f"{component.value}@{spatial}"


@lru_cache(maxsize=16)
def assignment_elements(flips: tuple[int, ...]) -> tuple[LinearModeMap, ...]:
    """Phase-flip maps for the given indices into FLIP_SITES."""
    return tuple(phase_flip_map(*FLIP_SITES[i]) for i in flips)


def apply_correction(state: MixedState, elements: tuple[LinearModeMap, ...]) -> MixedState:
    if not elements:
        return state
    return state.map_states(lambda s: apply_elements(s, elements))


def _search(pattern: DetectionPattern, conditioned: MixedState, ideal: PureState) -> tuple[int, ...]:
    assignments = [
        flips
        for k in range(len(FLIP_SITES) + 1)
        for flips in itertools.combinations(range(len(FLIP_SITES)), k)
    ]
    hits = [
        flips
        for flips in assignments
        if apply_correction(conditioned, assignment_elements(flips)).fidelity_with(ideal)
        >= 1.0 - CORRECTION_TOLERANCE
    ]
    if not hits:
        raise CorrectionNotFoundError(
            f"No phase-flip assignment restores the ideal output for {pattern.name}"
        )
    complement = tuple(i for i in range(len(FLIP_SITES)) if i not in hits[0])
    if len(hits) != 2 or hits[1] != complement:
        names = ["+".join(flip_label(*FLIP_SITES[i]) for i in h) or "none" for h in hits]
        raise CorrectionNotFoundError(
            f"Correction for {pattern.name} is ambiguous: {', '.join(names)}"
        )
    # assignments are ordered by size then index, so hits[0] is the preferred one
    return hits[0]


@lru_cache(maxsize=1)
def correction_table() -> Mapping[DetectionPattern, tuple[int, ...]]:
    """Flip indices per success pattern, discovered once and cached."""
    entangled, _ = evolved_branches(DISCOVERY_ALPHA, DISCOVERY_BETA, DISCOVERY_T)
    index = HeraldingIndex(entangled)
    ideal = ideal_output(DISCOVERY_ALPHA, DISCOVERY_BETA)
    table: dict[DetectionPattern, tuple[int, ...]] = {}
    for pattern in success_patterns():
        selection = index.postselect(pattern, DetectorModel.NUMBER_RESOLVING)
        if selection.conditioned is None:
            raise CorrectionNotFoundError(f"{pattern.name} never heralds the entangled branch")
        table[pattern] = _search(pattern, selection.conditioned, ideal)
        logger.debug("Correction for %s: %s", pattern.name, correction_labels(table[pattern]))
    logger.info("Discovered phase-flip corrections for %d patterns", len(table))
    return MappingProxyType(table)


def correction_labels(flips: tuple[int, ...]) -> list[str]:
    return [flip_label(*FLIP_SITES[i]) for i in flips]


def correction_for(pattern: DetectionPattern) -> tuple[LinearModeMap, ...]:
    """Phase-flip elements to apply after heralding ``pattern``."""
    table = correction_table()
    if pattern not in table:
        raise CorrectionNotFoundError(f"{pattern.name} is not a success pattern")
    return assignment_elements(table[pattern])
