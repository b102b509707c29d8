"""Pytest configuration and shared fixtures."""

import math

import pytest

from timebin_amp.fock import FockBasis, PureState, mode
from timebin_amp.notation import KetParser
from timebin_amp.protocol import DetectionPattern, ProtocolConfig, run_protocol

SQRT_HALF = 1 / math.sqrt(2)

# (alpha, beta) pairs covering both single-component qubits and generic ones.
COEFFICIENTS = [(1.0, 0.0), (0.0, 1.0), (SQRT_HALF, SQRT_HALF), (0.6, 0.8)]


@pytest.fixture
def ket_parser() -> KetParser:
    """Ket notation parser instance."""
    return KetParser()


@pytest.fixture
def s_h_a1():
    return mode("a1", "S", "H")


@pytest.fixture
def l_v_a1():
    return mode("a1", "L", "V")


@pytest.fixture
def hom_input() -> PureState:
    """Two identical S_H photons on the two input ports of a beam splitter."""
    return PureState.single(mode("x1", "S", "H"), mode("x2", "S", "H"))


@pytest.fixture
def two_photon_basis() -> FockBasis:
    return FockBasis.from_modes([mode("a2", "S", "H"), mode("a2", "L", "V")])


@pytest.fixture
def reference_pattern() -> DetectionPattern:
    """D1aD2a-D1bD2b, the pattern worked through by hand."""
    return DetectionPattern(side_a=(1, 2), side_b=(1, 2))


@pytest.fixture(scope="session")
def reference_result():
    """Protocol run at eta=0.2, t=0.25 with balanced coefficients."""
    return run_protocol(ProtocolConfig(eta=0.2, t=0.25))


class MockContext:
    """Mock MCP context for testing."""

    def __init__(self):
        self.messages = []

    async def info(self, message: str):
        """Mock info method."""
        self.messages.append(("info", message))

    async def error(self, message: str):
        """Mock error method."""
        self.messages.append(("error", message))


@pytest.fixture
def mock_context() -> MockContext:
    """Mock MCP context for testing tools."""
    return MockContext()
