"""Sparse pure and mixed multi-photon states over labelled optical modes."""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Iterator, Mapping
from types import MappingProxyType

from ..config import NORM_TOLERANCE, PRUNE_TOLERANCE
from ..errors import ModeOverlapError, ZeroStateError
from .modes import FockBasis, ModeId


class PureState:
    """Immutable sparse map from Fock basis states to complex amplitudes.

    Terms are kept in canonical basis order and amplitudes with magnitude
    below the pruning tolerance are dropped, so two states describing the same
    superposition compare equal regardless of how they were built.
    """

    __slots__ = ("_amps",)

    def __init__(
        self,
        amplitudes: Mapping[FockBasis, complex] | None = None,
        *,
        tolerance: float = PRUNE_TOLERANCE,
    ) -> None:
        items = (amplitudes or {}).items()
        kept = [(b, complex(a)) for b, a in items if abs(a) >= tolerance]
        kept.sort(key=lambda item: item[0].sort_key)
        self._amps: Mapping[FockBasis, complex] = MappingProxyType(dict(kept))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[FockBasis, complex]]) -> PureState:
        """Accumulate (basis, amplitude) pairs; repeated bases add up."""
        acc: dict[FockBasis, complex] = {}
        for basis, amp in terms:
            acc[basis] = acc.get(basis, 0j) + amp
        return cls(acc)

    @classmethod
    def vacuum(cls) -> PureState:
        return cls({FockBasis.vacuum(): 1.0})

    @classmethod
    def zero(cls) -> PureState:
        return cls()

    @classmethod
    def single(cls, *modes: ModeId, amplitude: complex = 1.0) -> PureState:
        """One basis state with a photon in each listed mode."""
        return cls({FockBasis.from_modes(modes): amplitude})

    @property
    def amplitudes(self) -> Mapping[FockBasis, complex]:
        return self._amps

    def amplitude(self, basis: FockBasis) -> complex:
        return self._amps.get(basis, 0j)

    def items(self) -> Iterator[tuple[FockBasis, complex]]:
        return iter(self._amps.items())

    def __iter__(self) -> Iterator[FockBasis]:
        return iter(self._amps)

    def __len__(self) -> int:
        return len(self._amps)

    @property
    def is_zero(self) -> bool:
        return not self._amps

    def norm_squared(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self._amps.values())

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def is_normalized(self, tolerance: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm_squared() - 1.0) <= tolerance

    def modes(self) -> frozenset[ModeId]:
        """Every mode occupied in at least one term."""
        occupied: set[ModeId] = set()
        for basis in self._amps:
            occupied.update(basis.modes)
        return frozenset(occupied)

    def photon_numbers(self) -> frozenset[int]:
        return frozenset(sum(n for _, n in b.occupations) for b in self._amps)

    def map_bases(self, fn: Callable[[FockBasis], FockBasis]) -> PureState:
        """Relabel every basis state; colliding images add coherently."""
        return PureState.from_terms((fn(b), a) for b, a in self._amps.items())

    def filter(self, keep: Callable[[FockBasis], bool]) -> PureState:
        return PureState({b: a for b, a in self._amps.items() if keep(b)})

    def __add__(self, other: PureState) -> PureState:
        if not isinstance(other, PureState):
            return NotImplemented
        return PureState.from_terms([*self._amps.items(), *other._amps.items()])

    def __sub__(self, other: PureState) -> PureState:
        if not isinstance(other, PureState):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> PureState:
        if not isinstance(scalar, (int, float, complex)):
            return NotImplemented
        return PureState({b: a * scalar for b, a in self._amps.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> PureState:
        return self * (1.0 / scalar)

    def __neg__(self) -> PureState:
        return self * -1.0

    def isclose(self, other: PureState, tolerance: float = NORM_TOLERANCE) -> bool:
        """Term-wise comparison of amplitudes."""
        for basis in set(self._amps) | set(other._amps):
            if abs(self.amplitude(basis) - other.amplitude(basis)) > tolerance:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PureState):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        from ..notation.render import format_state

        return format_state(self)

    def __repr__(self) -> str:
        return f"PureState({self})"


def create_photon(state: PureState, m: ModeId) -> PureState:
    """Apply the bosonic creation operator of mode ``m``."""
    terms = []
    for basis, amp in state.items():
        counts = basis.as_dict()
        n = counts.get(m, 0)
        counts[m] = n + 1
        terms.append((FockBasis.from_counts(counts), amp * math.sqrt(n + 1)))
    return PureState.from_terms(terms)


def inner_product(bra: PureState, ket: PureState) -> complex:
    """<bra|ket>, conjugate-linear in the first argument."""
    smaller = bra if len(bra) <= len(ket) else ket
    total = 0j
    for basis in smaller:
        total += bra.amplitude(basis).conjugate() * ket.amplitude(basis)
    return total


def tensor(first: PureState, second: PureState) -> PureState:
    """Product state of two states on disjoint modes."""
    shared = first.modes() & second.modes()
    if shared:
        names = ", ".join(str(m) for m in sorted(shared))
        raise ModeOverlapError(f"Cannot compose states sharing modes: {names}")
    return PureState.from_terms(
        (b1.merge(b2), a1 * a2)
        for b1, a1 in first.items()
        for b2, a2 in second.items()
    )


def normalize(state: PureState) -> tuple[float, PureState]:
    """Return the original norm and the unit-norm state."""
    norm = state.norm()
    if norm == 0.0:
        raise ZeroStateError("Cannot normalize the zero state")
    return norm, state / norm


def overlap_squared(first: PureState, second: PureState) -> float:
    """|<first|second>|**2 for unit vectors."""
    return abs(inner_product(first, second)) ** 2


def same_ray(first: PureState, second: PureState, tolerance: float = NORM_TOLERANCE) -> bool:
    """True when two unit states differ at most by a global phase."""
    return overlap_squared(first, second) >= 1.0 - tolerance


class MixedState:
    """Immutable weighted ensemble of normalised pure states."""

    __slots__ = ("_branches",)

    def __init__(self, branches: Iterable[tuple[float, PureState]]) -> None:
        self._branches = tuple((float(w), s) for w, s in branches)
        for weight, state in self._branches:
            if weight < -NORM_TOLERANCE:
                raise ValueError(f"Negative branch weight {weight}")
            if not state.is_normalized():
                raise ValueError("Mixed-state branches must be normalized")
        total = math.fsum(w for w, _ in self.branches)
        if abs(total - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"Branch weights sum to {total}, expected 1")

    @property
    def branches(self) -> tuple[tuple[float, PureState], ...]:
        return self._branches

    def __len__(self) -> int:
        return len(self._branches)

    def __repr__(self) -> str:
        inner = ", ".join(f"{w!r}: {s}" for w, s in self._branches)
        return f"MixedState({inner})"

    @classmethod
    def pure(cls, state: PureState) -> MixedState:
        return cls(((1.0, state),))

    @classmethod
    def from_unnormalized(cls, parts: Iterable[tuple[float, PureState]]) -> MixedState:
        """Build from (weight, state) pairs with arbitrary scale.

        Each state is normalised, its squared norm folded into the weight, and
        the weights rescaled to sum to one. Zero states are skipped.
        """
        collected = []
        for weight, state in parts:
            if weight <= 0.0 or state.is_zero:
                continue
            norm, unit = normalize(state)
            collected.append((weight * norm**2, unit))
        total = math.fsum(w for w, _ in collected)
        if total == 0.0:
            raise ZeroStateError("Mixed state has no weight")
        return cls(tuple((w / total, s) for w, s in collected))

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(w for w, _ in self.branches)

    @property
    def states(self) -> tuple[PureState, ...]:
        return tuple(s for _, s in self.branches)

    @property
    def is_pure(self) -> bool:
        return len(self.merged().branches) == 1

    def fidelity_with(self, target: PureState) -> float:
        """<target| rho |target>."""
        return math.fsum(w * overlap_squared(target, s) for w, s in self.branches)

    def map_states(self, fn: Callable[[PureState], PureState]) -> MixedState:
        return MixedState(tuple((w, fn(s)) for w, s in self.branches))

    def merged(self, tolerance: float = NORM_TOLERANCE) -> MixedState:
        """Combine branches whose states agree up to a global phase."""
        merged: list[tuple[float, PureState]] = []
        for weight, state in self.branches:
            for i, (w, s) in enumerate(merged):
                if same_ray(s, state, tolerance):
                    merged[i] = (w + weight, s)
                    break
            else:
                merged.append((weight, state))
        return MixedState(tuple(merged))
