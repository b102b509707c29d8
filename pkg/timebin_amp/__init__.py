"""timebin-amp - exact simulation of heralded amplification for time-bin entanglement.

A single photon carrying a time-bin qubit is shared between two parties and
mixed with vacuum by channel loss. Each party injects two auxiliary photons,
taps them through a variable beam splitter, interferes them with the signal
and heralds success on a pair of detector clicks. This package evolves the
Fock states through that linear-optical circuit exactly, post-selects on the
sixteen successful click patterns and checks the result against the closed
forms for the success probability, output fidelity and gain.

Example:
    >>> from timebin_amp import ProtocolConfig, run_protocol
    >>> result = run_protocol(ProtocolConfig(eta=0.2, t=0.25))
    >>> round(result.eta_out, 6)
    0.428571

    Or use the CLI:

    $ timebin-amp run --eta 0.2 --t 0.25

Modules:
    fock: Mode labels, sparse pure and mixed states
    optics: Linear-optical elements as creation-operator substitutions
    notation: Ket text parser and renderer
    protocol: Preparation, circuit, heralding, correction and runs
    analysis: Closed forms, sweeps and verification
    mcp: Model Context Protocol server
"""

__version__ = "0.1.0"
__license__ = "MIT"

from .analysis import run_checks, sweep, verify_against_brute_force
from .fock import FockBasis, MixedState, ModeId, PureState, mode
from .notation import format_state, parse_state
from .protocol import DetectionPattern, DetectorModel, ProtocolConfig, ProtocolResult, run_protocol

__all__ = [
    "run_checks",
    "sweep",
    "verify_against_brute_force",
    "FockBasis",
    "MixedState",
    "ModeId",
    "PureState",
    "mode",
    "format_state",
    "parse_state",
    "DetectionPattern",
    "DetectorModel",
    "ProtocolConfig",
    "ProtocolResult",
    "run_protocol",
]
