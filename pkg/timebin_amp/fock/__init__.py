"""Exact bosonic Fock-state algebra over labelled optical modes.

Classes:
    ModeId: Spatial path, time bin and polarization of one mode
    FockBasis: Canonical occupation-number basis state
    PureState: Sparse immutable superposition of basis states
    MixedState: Weighted ensemble of normalised pure states

Functions:
    create_photon: Bosonic creation operator
    inner_product: <bra|ket>
    tensor: Product of states on disjoint modes
    normalize: Split a state into its norm and unit vector
    total_photon_number: Photon count of a basis state
"""

from .modes import FockBasis, ModeId, Polarization, TimeBin, mode, sublevels, total_photon_number
from .states import (
    MixedState,
    PureState,
    create_photon,
    inner_product,
    normalize,
    overlap_squared,
    same_ray,
    tensor,
)

__all__ = [
    "FockBasis",
    "ModeId",
    "Polarization",
    "TimeBin",
    "mode",
    "sublevels",
    "total_photon_number",
    "MixedState",
    "PureState",
    "create_photon",
    "inner_product",
    "normalize",
    "overlap_squared",
    "same_ray",
    "tensor",
]
