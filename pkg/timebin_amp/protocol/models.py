"""Configuration and result models for the amplification protocol."""

from __future__ import annotations

import math
import re
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from ..config import COEFFICIENT_TOLERANCE
from ..fock.states import MixedState


class DetectorModel(str, Enum):
    """How a heralding detector reports photons."""

    NUMBER_RESOLVING = "number-resolving"
    THRESHOLD = "threshold"


class Side(str, Enum):
    """The two parties sharing the entangled photon."""

    A = "a"
    B = "b"

    @property
    def out_mode(self) -> str:
        return "out1" if self is Side.A else "out2"


# Detector pairs of one side that herald success: one S_H and one L_V detector.
ALLOWED_PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 4), (2, 3), (3, 4))


class DetectionPattern(BaseModel):
    """A pair of clicking detectors on each side, e.g. ``D1aD2a-D1bD2b``."""

    model_config = ConfigDict(frozen=True)

    side_a: tuple[int, int]
    side_b: tuple[int, int]

    @field_validator("side_a", "side_b", mode="before")
    @classmethod
    def _sorted_pair(cls, value: Any) -> tuple[int, int]:
        first, second = sorted(int(v) for v in value)
        return first, second

    @field_validator("side_a", "side_b")
    @classmethod
    def _allowed_pair(cls, value: tuple[int, int]) -> tuple[int, int]:
        if value not in ALLOWED_PAIRS:
            raise ValueError(
                f"Detector pair D{value[0]}D{value[1]} does not herald success; "
                f"allowed pairs: {', '.join(f'D{i}D{j}' for i, j in ALLOWED_PAIRS)}"
            )
        return value

    def pair(self, side: Side) -> tuple[int, int]:
        return self.side_a if side is Side.A else self.side_b

    def detector_names(self) -> tuple[str, str, str, str]:
        (i, j), (k, m) = self.side_a, self.side_b
        return f"D{i}a", f"D{j}a", f"D{k}b", f"D{m}b"

    @property
    def name(self) -> str:
        a1, a2, b1, b2 = self.detector_names()
        return f"{a1}{a2}-{b1}{b2}"

    @classmethod
    def from_name(cls, name: str) -> DetectionPattern:
        """Parse ``D1aD2a-D1bD2b`` (separator optional)."""
        found = re.findall(r"D([1-4])([ab])", name)
        sides = {"a": [int(i) for i, s in found if s == "a"], "b": [int(i) for i, s in found if s == "b"]}
        if len(found) != 4 or len(sides["a"]) != 2 or len(sides["b"]) != 2:
            raise ValueError(f"Invalid detection pattern name: {name!r}")
        return cls(side_a=sides["a"], side_b=sides["b"])

    def __str__(self) -> str:
        return self.name


class ProtocolConfig(BaseModel):
    """Parameters of one protocol run."""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(default=1 / math.sqrt(2), ge=0.0, le=1.0)
    beta: float = Field(default=1 / math.sqrt(2), ge=0.0, le=1.0)
    eta: float = Field(..., ge=0.0, le=1.0, description="Entangled-branch weight")
    t: float = Field(..., ge=0.0, le=1.0, description="VBS transmission")
    detector_model: DetectorModel = DetectorModel.NUMBER_RESOLVING

    @model_validator(mode="after")
    def _normalized_coefficients(self) -> ProtocolConfig:
        norm = self.alpha**2 + self.beta**2
        if abs(norm - 1.0) > COEFFICIENT_TOLERANCE:
            raise ValueError(f"alpha**2 + beta**2 must be 1, got {norm!r}")
        return self


class PatternOutcome(BaseModel):
    """Heralding statistics for one detection pattern."""

    pattern: DetectionPattern
    prob_entangled: float
    prob_vacuum: float
    correction: list[str] = Field(default_factory=list)
    fidelity: float | None = None

    @field_serializer("pattern")
    def _pattern_name(self, pattern: DetectionPattern) -> str:
        return pattern.name

    @property
    def correction_label(self) -> str:
        if not self.correction:
            return "none"
        return ", ".join(f"flip {c}" for c in self.correction)


class ProtocolResult(BaseModel):
    """Aggregated outcome of one protocol run."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    config: ProtocolConfig
    p1: float = Field(..., description="Entangled-branch success probability")
    p2: float = Field(..., description="Vacuum-branch success probability")
    p_total: float
    eta_out: float = Field(..., description="Output fidelity eta'")
    fidelity_defined: bool = True
    g: float | None = Field(None, description="Amplification factor eta'/eta")
    output_fidelity: float | None = Field(
        None, description="Overlap of the corrected entangled branch with the ideal state"
    )
    per_pattern: list[PatternOutcome] = Field(default_factory=list)
    conditioned_output: MixedState | None = None

    @field_serializer("conditioned_output")
    def _mixed_state_terms(self, state: MixedState | None) -> list[dict[str, Any]] | None:
        if state is None:
            return None
        return [{"weight": w, "state": str(s)} for w, s in state.branches]

    def lookup(self, pattern: DetectionPattern) -> PatternOutcome:
        for outcome in self.per_pattern:
            if outcome.pattern == pattern:
                return outcome
        raise KeyError(pattern.name)
