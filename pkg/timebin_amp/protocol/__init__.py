"""The heralded amplification protocol.

Classes:
    ProtocolConfig: Input coefficients, channel fidelity, VBS transmission, detector model
    DetectionPattern: One heralding detector pair per side
    ProtocolResult: Aggregated probabilities, output fidelity and gain
    HeraldingIndex: Circuit output grouped by detector record

Functions:
    prepare_input_branches, prepare_auxiliary: State preparation
    build_circuit, evolve, evolved_branches: Circuit evolution
    success_patterns, postselect, outcome_distribution: Heralding
    ideal_output, correction_for, correction_table: Phase-flip corrections
    run_protocol: End-to-end run
"""

from .circuit import (
    DETECTORS,
    Detector,
    build_circuit,
    evolve,
    evolved_branches,
    full_input,
    prepare_auxiliary,
    prepare_input_branches,
)
from .correction import correction_for, correction_table, ideal_output
from .heralding import (
    HeraldingIndex,
    PostSelection,
    outcome_distribution,
    postselect,
    success_patterns,
)
from .models import (
    DetectionPattern,
    DetectorModel,
    PatternOutcome,
    ProtocolConfig,
    ProtocolResult,
    Side,
)
from .runner import run_protocol

__all__ = [
    "DETECTORS",
    "Detector",
    "build_circuit",
    "evolve",
    "evolved_branches",
    "full_input",
    "prepare_auxiliary",
    "prepare_input_branches",
    "correction_for",
    "correction_table",
    "ideal_output",
    "HeraldingIndex",
    "PostSelection",
    "outcome_distribution",
    "postselect",
    "success_patterns",
    "DetectionPattern",
    "DetectorModel",
    "PatternOutcome",
    "ProtocolConfig",
    "ProtocolResult",
    "Side",
    "run_protocol",
]
