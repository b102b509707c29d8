"""Optical mode labels and occupation-number basis states."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, total_ordering


class TimeBin(str, Enum):
    """Arrival slot of a photon."""

    S = "S"
    L = "L"


class Polarization(str, Enum):
    """Polarization of a photon."""

    H = "H"
    V = "V"


_BIN_ORDER = {TimeBin.S: 0, TimeBin.L: 1}
_POL_ORDER = {Polarization.H: 0, Polarization.V: 1}
_SPATIAL_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*")


@lru_cache(maxsize=None)
def _spatial_key(label: str) -> tuple[tuple[int, int | str], ...]:
    """Natural sort key so that a2 < a10."""
    parts = re.findall(r"\d+|\D+", label)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts)


@total_ordering
@dataclass(frozen=True, eq=True)
class ModeId:
    """A single optical mode: spatial path, time bin and polarization.

    Ordering is lexicographic on (spatial, bin, pol), with spatial labels
    compared naturally (``a2`` before ``a10``) and ``S`` before ``L``.
    """

    spatial: str
    bin: TimeBin
    pol: Polarization
    sort_key: tuple[object, ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if not _SPATIAL_PATTERN.fullmatch(self.spatial):
            raise ValueError(f"Invalid spatial label: {self.spatial!r}")
        object.__setattr__(self, "bin", TimeBin(self.bin))
        object.__setattr__(self, "pol", Polarization(self.pol))
        object.__setattr__(
            self,
            "sort_key",
            (_spatial_key(self.spatial), _BIN_ORDER[self.bin], _POL_ORDER[self.pol]),
        )

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ModeId):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.bin.value}_{self.pol.value}@{self.spatial}"

    def with_spatial(self, spatial: str) -> ModeId:
        """Same sublevel on another spatial path."""
        return mode(spatial, self.bin, self.pol)


@lru_cache(maxsize=None)
def mode(spatial: str, bin: TimeBin | str, pol: Polarization | str) -> ModeId:
    """Interned ModeId constructor."""
    return ModeId(spatial, TimeBin(bin), Polarization(pol))


def sublevels(spatial: str) -> tuple[ModeId, ...]:
    """All four (bin, pol) sublevels of a spatial path."""
    return tuple(mode(spatial, b, p) for b in TimeBin for p in Polarization)


@dataclass(frozen=True)
class FockBasis:
    """Occupation-number basis state.

    ``occupations`` is the canonical, sorted tuple of ``(mode, count)`` pairs
    with no zero counts; the vacuum is the empty tuple. Build instances with
    :meth:`from_counts` unless the tuple is already canonical.
    """

    occupations: tuple[tuple[ModeId, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[ModeId, int]) -> FockBasis:
        """Canonical basis state from a mode -> count mapping."""
        for m, n in counts.items():
            if n < 0:
                raise ValueError(f"Negative photon count {n} in mode {m}")
        items = sorted(((m, n) for m, n in counts.items() if n), key=_item_key)
        return cls(tuple(items))

    @classmethod
    def from_modes(cls, modes: Iterable[ModeId]) -> FockBasis:
        """Basis state with one photon per listed mode (repeats add up)."""
        counts: dict[ModeId, int] = {}
        for m in modes:
            counts[m] = counts.get(m, 0) + 1
        return cls.from_counts(counts)

    @classmethod
    def vacuum(cls) -> FockBasis:
        return _VACUUM

    @property
    def sort_key(self) -> tuple[object, ...]:
        return tuple((m.sort_key, n) for m, n in self.occupations)

    @property
    def modes(self) -> frozenset[ModeId]:
        return frozenset(m for m, _ in self.occupations)

    @property
    def is_vacuum(self) -> bool:
        return not self.occupations

    def count(self, m: ModeId) -> int:
        for occupied, n in self.occupations:
            if occupied == m:
                return n
        return 0

    def as_dict(self) -> dict[ModeId, int]:
        return dict(self.occupations)

    def creation_sequence(self) -> list[ModeId]:
        """Modes of the creation operators building this state, with repeats."""
        return [m for m, n in self.occupations for _ in range(n)]

    def restrict(self, keep: frozenset[str]) -> FockBasis:
        """Occupations on the given spatial paths only."""
        return FockBasis(tuple(item for item in self.occupations if item[0].spatial in keep))

    def exclude(self, drop: frozenset[str]) -> FockBasis:
        """Occupations outside the given spatial paths."""
        return FockBasis(
            tuple(item for item in self.occupations if item[0].spatial not in drop)
        )

    def merge(self, other: FockBasis) -> FockBasis:
        """Product basis state of two states on disjoint modes."""
        counts = self.as_dict()
        for m, n in other.occupations:
            counts[m] = counts.get(m, 0) + n
        return FockBasis.from_counts(counts)

    def __str__(self) -> str:
        from ..notation.render import format_basis

        return format_basis(self)


def _item_key(item: tuple[ModeId, int]) -> tuple[object, ...]:
    return item[0].sort_key


_VACUUM = FockBasis()


def total_photon_number(basis: FockBasis) -> int:
    """Sum of the occupation counts of a basis state."""
    return sum(n for _, n in basis.occupations)
