"""Canonical text rendering of states in ket notation."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..fock.modes import FockBasis, ModeId

if TYPE_CHECKING:
    from ..fock.states import PureState


def format_mode(mode: ModeId) -> str:
    """``S_H@a1`` form of a mode."""
    return str(mode)


def format_basis(basis: FockBasis) -> str:
    if basis.is_vacuum:
        return "|vac>"
    parts = [
        format_mode(m) if n == 1 else f"{n}*{format_mode(m)}"
        for m, n in basis.occupations
    ]
    return "|" + ", ".join(parts) + ">"


def _format_amplitude(amp: complex) -> tuple[str, str]:
    """Split an amplitude into a sign and a magnitude text."""
    if amp.imag == 0.0:
        sign = "-" if amp.real < 0 else "+"
        return sign, repr(abs(amp.real))
    return "+", f"({amp.real!r}{amp.imag:+}j)"


def format_state(state: PureState) -> str:
    """Render a state so that :func:`parse_state` reads it back.

    The zero state renders as the empty string.
    """
    pieces = []
    for i, (basis, amp) in enumerate(state.items()):
        sign, magnitude = _format_amplitude(amp)
        ket = format_basis(basis)
        if i == 0:
            pieces.append(f"{'-' if sign == '-' else ''}{magnitude}{ket}")
        else:
            pieces.append(f"{sign} {magnitude}{ket}")
    return " ".join(pieces)
