"""Linear-optical elements as substitutions on creation operators.

Every element is a :class:`LinearModeMap`: each input mode's creation operator
is replaced by a linear combination of output-mode creation operators,

    a_in^dagger  ->  sum_k c_k a_k^dagger,

and a multi-photon basis state is rewritten as a product of such operators
acting on the vacuum, then re-expanded with bosonic normalisation. Modes
without a column pass through unchanged.

Sign conventions:
    beam splitter   a1 -> (a3 + a4)/sqrt2,  a2 -> (a3 - a4)/sqrt2
    variable BS     in -> sqrt(t) kept + sqrt(1 - t) out
    PBS             H -> outH, V -> outV (both time bins)
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, reduce

import numpy as np

from ..config import NORM_TOLERANCE, PRUNE_TOLERANCE
from ..errors import DomainError, ModeOverlapError, NonIsometricMapError
from ..fock.modes import FockBasis, ModeId, Polarization, TimeBin, mode, sublevels
from ..fock.states import PureState

logger = logging.getLogger(__name__)

Column = tuple[tuple[ModeId, complex], ...]


class Component(str, Enum):
    """Time-bin qubit component addressed by a phase flip."""

    S_H = "S_H"
    L_V = "L_V"

    @property
    def sublevel(self) -> tuple[TimeBin, Polarization]:
        if self is Component.S_H:
            return TimeBin.S, Polarization.H
        return TimeBin.L, Polarization.V


@dataclass(frozen=True, eq=False)
class LinearModeMap:
    """Linear substitution on creation operators.

    ``columns`` maps each input mode to its output combination. Unmapped modes
    are passed through, which requires that they are not also written to by a
    column (checked when the map is applied).
    """

    name: str
    columns: Mapping[ModeId, Column] = field(default_factory=dict)

    @cached_property
    def input_modes(self) -> frozenset[ModeId]:
        return frozenset(self.columns)

    @cached_property
    def output_modes(self) -> frozenset[ModeId]:
        return frozenset(m for col in self.columns.values() for m, _ in col)

    def column(self, m: ModeId) -> Column:
        """Output combination of ``m`` (identity for unmapped modes)."""
        return self.columns.get(m, ((m, 1.0 + 0j),))

    def matrix(self) -> tuple[np.ndarray, list[ModeId], list[ModeId]]:
        """Coefficient matrix (outputs x inputs) with its row and column modes."""
        inputs = sorted(self.columns)
        outputs = sorted(self.output_modes)
        row = {m: i for i, m in enumerate(outputs)}
        mat = np.zeros((len(outputs), len(inputs)), dtype=complex)
        for j, m in enumerate(inputs):
            for out, c in self.columns[m]:
                mat[row[out], j] += c
        return mat, outputs, inputs

    def isometry_error(self) -> float:
        """Largest entry of |M^dagger M - I|."""
        mat, _, inputs = self.matrix()
        if not inputs:
            return 0.0
        gram = mat.conj().T @ mat
        return float(np.max(np.abs(gram - np.eye(len(inputs)))))

    @cached_property
    def is_isometric(self) -> bool:
        return self.isometry_error() <= NORM_TOLERANCE

    def check_isometry(self) -> None:
        if not self.is_isometric:
            raise NonIsometricMapError(
                f"{self.name} is not isometric "
                f"(max |M^dagger M - I| = {self.isometry_error():.3e})"
            )

    def __str__(self) -> str:
        return self.name


def _uniform_map(
    name: str, routing: Mapping[str, Sequence[tuple[str, complex]]]
) -> LinearModeMap:
    """Map acting identically on all (bin, pol) sublevels of the given paths."""
    columns: dict[ModeId, Column] = {}
    for spatial, outs in routing.items():
        for m in sublevels(spatial):
            columns[m] = tuple((m.with_spatial(out), complex(c)) for out, c in outs)
    return LinearModeMap(name=name, columns=columns)


def beam_splitter_map(in_a: str, in_b: str, out_a: str, out_b: str) -> LinearModeMap:
    """50:50 beam splitter with the minus sign on in_b -> out_b."""
    if in_a == in_b or out_a == out_b:
        raise ValueError(
            f"Beam splitter needs distinct ports, got {in_a},{in_b} -> {out_a},{out_b}"
        )
    s = 1 / math.sqrt(2)
    return _uniform_map(
        f"BS({in_a},{in_b}->{out_a},{out_b})",
        {in_a: [(out_a, s), (out_b, s)], in_b: [(out_a, s), (out_b, -s)]},
    )


def vbs_map(in_mode: str, kept: str, out: str, t: float) -> LinearModeMap:
    """Variable beam splitter of transmission ``t``, both amplitudes positive."""
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"VBS transmission must be in [0, 1], got {t}")
    if kept == out:
        raise ValueError(f"VBS needs distinct output ports, got {kept} twice")
    return _uniform_map(
        f"VBS({in_mode}->{kept},{out};t={t!r})",
        {in_mode: [(kept, math.sqrt(t)), (out, math.sqrt(1.0 - t))]},
    )


def pbs_map(in_mode: str, out_h: str, out_v: str) -> LinearModeMap:
    """Polarizing beam splitter: H to ``out_h``, V to ``out_v``."""
    if out_h == out_v:
        raise ValueError(f"PBS needs distinct output ports, got {out_h} twice")
    columns: dict[ModeId, Column] = {}
    for m in sublevels(in_mode):
        out = out_h if m.pol is Polarization.H else out_v
        columns[m] = ((m.with_spatial(out), 1.0 + 0j),)
    return LinearModeMap(name=f"PBS({in_mode}->{out_h},{out_v})", columns=columns)


def phase_flip_map(spatial: str, component: Component | str) -> LinearModeMap:
    """Sign flip of one time-bin qubit component on a spatial path."""
    component = Component(component)
    m = mode(spatial, *component.sublevel)
    return LinearModeMap(
        name=f"Z[{component.value}@{spatial}]",
        columns={m: ((m, -1.0 + 0j),)},
    )


def identity_map() -> LinearModeMap:
    return LinearModeMap(name="I")


def compose(first: LinearModeMap, second: LinearModeMap) -> LinearModeMap:
    """Single map equivalent to applying ``first`` then ``second``."""
    columns: dict[ModeId, Column] = {}
    for m, col in first.columns.items():
        acc: dict[ModeId, complex] = {}
        for mid, c in col:
            for out, d in second.column(mid):
                acc[out] = acc.get(out, 0j) + c * d
        columns[m] = tuple((out, c) for out, c in sorted(acc.items()) if abs(c) >= PRUNE_TOLERANCE)
    for m, col in second.columns.items():
        if m not in first.columns and m not in first.output_modes:
            columns[m] = col
    return LinearModeMap(name=f"{first.name};{second.name}", columns=columns)


def _expand_basis(basis: FockBasis, element: LinearModeMap) -> list[tuple[FockBasis, complex]]:
    """Image of one basis state as (basis, amplitude) pairs."""
    ops = basis.creation_sequence()
    # |n> = prod (a^dagger)^n / sqrt(n!) |0>
    norm_in = math.prod(math.factorial(n) for _, n in basis.occupations)
    terms = []
    for choice in itertools.product(*(element.column(m) for m in ops)):
        counts: dict[ModeId, int] = {}
        coeff = 1.0 + 0j
        for out, c in choice:
            counts[out] = counts.get(out, 0) + 1
            coeff *= c
        norm_out = math.prod(math.factorial(n) for n in counts.values())
        terms.append((FockBasis.from_counts(counts), coeff * math.sqrt(norm_out / norm_in)))
    return terms


def apply_mode_map(state: PureState, element: LinearModeMap) -> PureState:
    """Push a state through a linear element."""
    element.check_isometry()
    passthrough = state.modes() - element.input_modes
    collisions = passthrough & element.output_modes
    if collisions:
        names = ", ".join(str(m) for m in sorted(collisions))
        raise ModeOverlapError(f"{element.name} writes to occupied pass-through modes: {names}")

    terms = []
    for basis, amp in state.items():
        terms.extend((b, amp * c) for b, c in _expand_basis(basis, element))
    result = PureState.from_terms(terms)
    logger.debug("%s: %d -> %d terms", element.name, len(state), len(result))
    return result


def apply_elements(state: PureState, elements: Sequence[LinearModeMap]) -> PureState:
    """Apply an ordered element list."""
    return reduce(apply_mode_map, elements, state)
