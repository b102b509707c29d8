"""End-to-end protocol runs."""

from __future__ import annotations

import logging
import math

from ..fock.states import MixedState, PureState
from .circuit import evolved_branches
from .correction import apply_correction, correction_for, correction_labels, correction_table, ideal_output
from .heralding import HeraldingIndex, success_patterns
from .models import PatternOutcome, ProtocolConfig, ProtocolResult

logger = logging.getLogger(__name__)


def run_protocol(config: ProtocolConfig) -> ProtocolResult:
    """Evolve both input branches, herald all sixteen patterns and aggregate.

    Pure function of ``config``; the only shared state is the per-t cache of
    evolved side pieces and the correction table, both read-only once built.
    """
    entangled, vacuum = evolved_branches(config.alpha, config.beta, config.t)
    entangled_index = HeraldingIndex(entangled)
    vacuum_index = HeraldingIndex(vacuum)
    ideal = ideal_output(config.alpha, config.beta)
    table = correction_table()

    outcomes: list[PatternOutcome] = []
    parts: list[tuple[float, PureState]] = []
    weighted_fidelity: list[float] = []
    for pattern in success_patterns():
        ent = entangled_index.postselect(pattern, config.detector_model)
        vac = vacuum_index.postselect(pattern, config.detector_model)
        fidelity = None
        if ent.conditioned is not None:
            corrected = apply_correction(ent.conditioned, correction_for(pattern))
            fidelity = corrected.fidelity_with(ideal)
            weighted_fidelity.append(ent.probability * fidelity)
            parts.extend((config.eta * ent.probability * w, s) for w, s in corrected.branches)
        if vac.conditioned is not None:
            parts.extend(
                ((1.0 - config.eta) * vac.probability * w, s) for w, s in vac.conditioned.branches
            )
        outcomes.append(
            PatternOutcome(
                pattern=pattern,
                prob_entangled=ent.probability,
                prob_vacuum=vac.probability,
                correction=correction_labels(table[pattern]),
                fidelity=fidelity,
            )
        )

    p1 = math.fsum(o.prob_entangled for o in outcomes)
    p2 = math.fsum(o.prob_vacuum for o in outcomes)
    p_total = config.eta * p1 + (1.0 - config.eta) * p2

    fidelity_defined = p_total > 0.0
    eta_out = config.eta * p1 / p_total if fidelity_defined else 0.0
    g = eta_out / config.eta if fidelity_defined and config.eta > 0.0 else None
    output_fidelity = math.fsum(weighted_fidelity) / p1 if p1 > 0.0 else None

    conditioned = None
    if fidelity_defined and any(w > 0.0 for w, _ in parts):
        conditioned = MixedState.from_unnormalized(parts).merged()

    logger.debug(
        "run eta=%r t=%r %s: p1=%r p2=%r eta'=%r",
        config.eta,
        config.t,
        config.detector_model.value,
        p1,
        p2,
        eta_out,
    )
    return ProtocolResult(
        config=config,
        p1=p1,
        p2=p2,
        p_total=p_total,
        eta_out=eta_out,
        fidelity_defined=fidelity_defined,
        g=g,
        output_fidelity=output_fidelity,
        per_pattern=outcomes,
        conditioned_output=conditioned,
    )
