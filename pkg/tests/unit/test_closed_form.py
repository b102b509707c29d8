"""Unit tests for the closed-form curves."""

import pytest

from timebin_amp.analysis import (
    amplification_threshold,
    closed_eta_prime,
    closed_g,
    closed_max_p_total,
    closed_p1,
    closed_p2,
    closed_p_total,
)
from timebin_amp.errors import DomainError


class TestProbabilities:
    """Test success probabilities."""

    def test_values(self):
        assert closed_p1(0.3) == pytest.approx(0.0189)
        assert closed_p2(0.3) == pytest.approx(0.0081)
        assert closed_p_total(0.4, 0.3) == pytest.approx(0.01242)

    def test_total_is_mixture(self):
        eta, t = 0.7, 0.2
        assert closed_p_total(eta, t) == pytest.approx(eta * closed_p1(t) + (1 - eta) * closed_p2(t))

    @pytest.mark.parametrize("eta", [0.0, 0.3, 1.0])
    def test_half_transmission(self, eta):
        assert closed_p_total(eta, 0.5) == pytest.approx(1 / 16)

    @pytest.mark.parametrize("value", [-0.01, 1.01])
    def test_domain(self, value):
        with pytest.raises(DomainError):
            closed_p1(value)
        with pytest.raises(DomainError):
            closed_p_total(value, 0.5)


class TestFidelityAndGain:
    """Test eta' and g including their undefined points."""

    def test_reference(self):
        assert closed_eta_prime(0.2, 0.25) == pytest.approx(3 / 7)
        assert closed_g(0.2, 0.25) == pytest.approx(15 / 7)

    def test_crossover_at_half(self):
        for eta in (0.2, 0.4, 0.8):
            assert closed_eta_prime(eta, 0.5) == pytest.approx(eta)
            assert closed_g(eta, 0.5) == pytest.approx(1.0)
        assert amplification_threshold() == 0.5

    def test_amplifies_below_threshold(self):
        assert closed_g(0.4, 0.3) > 1.0
        assert closed_g(0.4, 0.7) < 1.0

    def test_limits(self):
        assert closed_eta_prime(0.4, 0.0) == 1.0
        assert closed_eta_prime(0.4, 1.0) == 0.0
        assert closed_g(0.4, 0.0) == pytest.approx(2.5)
        assert closed_eta_prime(1.0, 0.6) == 1.0
        assert closed_g(1.0, 0.6) == 1.0

    def test_undefined(self):
        assert closed_eta_prime(1.0, 1.0) is None
        assert closed_eta_prime(0.0, 0.0) is None
        assert closed_g(0.0, 0.3) is None
        assert closed_eta_prime(0.0, 0.3) == 0.0


class TestMaximum:
    """Test the maximum of the success probability."""

    @pytest.mark.parametrize("eta", [0.0, 0.2, 0.5])
    def test_boundary_maximum(self, eta):
        t, value = closed_max_p_total(eta)
        assert t == 0.5
        assert value == pytest.approx(1 / 16)

    def test_interior_maximum(self):
        t, value = closed_max_p_total(0.9, t_max=1.0)
        assert t == pytest.approx(3 * 0.9 / (4 * 0.8))
        assert t > 0.5
        assert value >= closed_p_total(0.9, 1.0)

    def test_interior_point_outside_range(self):
        t, _ = closed_max_p_total(0.6, t_max=1.0)
        assert t == 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            closed_max_p_total(0.5, t_max=2.0)
