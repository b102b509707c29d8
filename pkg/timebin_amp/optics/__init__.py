"""Linear-optical elements acting on multi-photon Fock states.

Classes:
    LinearModeMap: Isometric substitution on creation operators
    Component: Time-bin qubit component (S_H or L_V)

Functions:
    beam_splitter_map, vbs_map, pbs_map, phase_flip_map: Element factories
    apply_mode_map: Push a state through one element
    apply_elements: Push a state through an ordered element list
    compose: Fuse two elements into one map
"""

from .elements import (
    Component,
    LinearModeMap,
    apply_elements,
    apply_mode_map,
    beam_splitter_map,
    compose,
    identity_map,
    pbs_map,
    phase_flip_map,
    vbs_map,
)

__all__ = [
    "Component",
    "LinearModeMap",
    "apply_elements",
    "apply_mode_map",
    "beam_splitter_map",
    "compose",
    "identity_map",
    "pbs_map",
    "phase_flip_map",
    "vbs_map",
]
