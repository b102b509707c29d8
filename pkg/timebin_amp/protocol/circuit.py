"""State preparation and the linear-optical amplifier circuit.

Each party holds one input path (a1 / b1) carrying its share of the
single-photon entangled state and one auxiliary path (a2 / b2) carrying an
S_H and an L_V photon. A variable beam splitter taps the auxiliary photons
into the output path (out1 / out2), a 50:50 beam splitter mixes input and
auxiliary paths, and four PBSs sort the results onto the detector paths:

    D1 <- a5 (S_H)   D2 <- a6 (L_V)   D3 <- a7 (S_H)   D4 <- a8 (L_V)

and likewise for side b.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from ..config import COEFFICIENT_TOLERANCE
from ..errors import DomainError
from ..fock.modes import FockBasis, Polarization, TimeBin, mode
from ..fock.states import PureState, create_photon, tensor
from ..optics.elements import (
    LinearModeMap,
    apply_elements,
    beam_splitter_map,
    pbs_map,
    vbs_map,
)
from .models import Side

logger = logging.getLogger(__name__)

OUTPUT_PATHS = frozenset({"out1", "out2"})


@dataclass(frozen=True)
class Detector:
    """A single-photon detector watching one (path, polarization) channel."""

    index: int
    side: Side
    spatial: str
    pol: Polarization

    @property
    def name(self) -> str:
        return f"D{self.index}{self.side.value}"


def _side_detectors(side: Side) -> tuple[Detector, ...]:
    p = side.value
    return (
        Detector(1, side, f"{p}5", Polarization.H),
        Detector(2, side, f"{p}6", Polarization.V),
        Detector(3, side, f"{p}7", Polarization.H),
        Detector(4, side, f"{p}8", Polarization.V),
    )


DETECTORS: tuple[Detector, ...] = _side_detectors(Side.A) + _side_detectors(Side.B)


def input_path(side: Side) -> str:
    return f"{side.value}1"


def auxiliary_path(side: Side) -> str:
    return f"{side.value}2"


def qubit_state(alpha: complex, beta: complex, spatial: str) -> PureState:
    """alpha|S_H> + beta|L_V> on one path."""
    return PureState.from_terms(
        [
            (FockBasis.from_modes([mode(spatial, TimeBin.S, Polarization.H)]), alpha),
            (FockBasis.from_modes([mode(spatial, TimeBin.L, Polarization.V)]), beta),
        ]
    )


def check_coefficients(alpha: complex, beta: complex) -> None:
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1.0) > COEFFICIENT_TOLERANCE:
        raise DomainError(f"|alpha|**2 + |beta|**2 must be 1, got {norm!r}")


def prepare_input_branches(alpha: complex, beta: complex) -> tuple[PureState, PureState]:
    """Entangled and vacuum branches of the lossy input.

    The entangled branch is (|psi>_a1 |0>_b1 + |0>_a1 |psi>_b1)/sqrt2 with
    |psi> = alpha|S_H> + beta|L_V>.
    """
    check_coefficients(alpha, beta)
    entangled = (
        qubit_state(alpha, beta, input_path(Side.A)) + qubit_state(alpha, beta, input_path(Side.B))
    ) / math.sqrt(2)
    return entangled, PureState.vacuum()


def prepare_auxiliary(side: Side | str) -> PureState:
    """|S_H, L_V> on the side's auxiliary path."""
    spatial = auxiliary_path(Side(side))
    return PureState.single(
        mode(spatial, TimeBin.S, Polarization.H),
        mode(spatial, TimeBin.L, Polarization.V),
    )


def side_elements(side: Side, t: float) -> list[LinearModeMap]:
    """VBS, BS and the two PBSs of one party, in order."""
    p = side.value
    return [
        vbs_map(f"{p}2", f"{p}2", side.out_mode, t),
        beam_splitter_map(f"{p}1", f"{p}2", f"{p}3", f"{p}4"),
        pbs_map(f"{p}3", f"{p}5", f"{p}6"),
        pbs_map(f"{p}4", f"{p}7", f"{p}8"),
    ]


@lru_cache(maxsize=256)
def build_circuit(t: float) -> tuple[LinearModeMap, ...]:
    """Ordered element list: VBS1, VBS2, BS1, BS2, PBS5-PBS8."""
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"VBS transmission must be in [0, 1], got {t}")
    a, b = side_elements(Side.A, t), side_elements(Side.B, t)
    return (a[0], b[0], a[1], b[1], a[2], a[3], b[2], b[3])


def evolve(state: PureState, circuit: tuple[LinearModeMap, ...] | list[LinearModeMap]) -> PureState:
    """Push a state through an element list."""
    return apply_elements(state, circuit)


@dataclass(frozen=True)
class SidePieces:
    """Evolved single-side inputs: no signal photon, S_H signal, L_V signal."""

    empty: PureState
    s_h: PureState
    l_v: PureState


@lru_cache(maxsize=256)
def _side_pieces(side: Side, t: float) -> SidePieces:
    elements = side_elements(side, t)
    aux = prepare_auxiliary(side)
    path = input_path(side)
    signal_s = create_photon(aux, mode(path, TimeBin.S, Polarization.H))
    signal_l = create_photon(aux, mode(path, TimeBin.L, Polarization.V))
    logger.debug("Evolving side %s pieces at t=%r", side.value, t)
    return SidePieces(
        empty=evolve(aux, elements),
        s_h=evolve(signal_s, elements),
        l_v=evolve(signal_l, elements),
    )


def evolved_branches(alpha: complex, beta: complex, t: float) -> tuple[PureState, PureState]:
    """Circuit outputs of the entangled and vacuum branches.

    The circuit acts on side-a and side-b paths independently, so each side's
    three possible inputs are evolved once per t and the branches assembled
    from tensor products by linearity.
    """
    check_coefficients(alpha, beta)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"VBS transmission must be in [0, 1], got {t}")
    pa, pb = _side_pieces(Side.A, t), _side_pieces(Side.B, t)
    signal_a = alpha * pa.s_h + beta * pa.l_v
    signal_b = alpha * pb.s_h + beta * pb.l_v
    entangled = (tensor(signal_a, pb.empty) + tensor(pa.empty, signal_b)) / math.sqrt(2)
    vacuum = tensor(pa.empty, pb.empty)
    return entangled, vacuum


def full_input(branch: PureState) -> PureState:
    """Input branch together with both parties' auxiliary photons."""
    return tensor(tensor(branch, prepare_auxiliary(Side.A)), prepare_auxiliary(Side.B))
