"""Human-readable ket notation for multi-photon states.

A state is written as a signed sum of kets, each listing the occupied modes as
``<bin>_<pol>@<spatial>``, with an optional ``n*`` multiplicity::

    0.7071067811865476|S_H@a1> + 0.7071067811865476|L_V@b1>
    0.5|S_H@a2, L_V@a2> - 0.5|2*S_H@a3>
    |vac>

Functions:
    parse_state: Parse notation text into a PureState
    format_state: Render a PureState in canonical notation
    parse_mode: Parse a single ``S_H@a1`` mode label
    format_mode: Render a ModeId as a mode label
"""

from .parser import KetParser, parse_state, parse_mode
from .render import format_state, format_mode, format_basis

__all__ = [
    "KetParser",
    "parse_state",
    "parse_mode",
    "format_state",
    "format_mode",
    "format_basis",
]
