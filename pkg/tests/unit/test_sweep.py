"""Unit tests for parameter sweeps."""

import pytest
from pydantic import ValidationError

from timebin_amp.analysis import SweepRow, SweepSource, evaluate_point, sweep, sweep_async, t_grid
from timebin_amp.errors import DomainError


class TestTGrid:
    """Test transmission grids."""

    def test_figure_grid(self):
        ts = t_grid(0.01, 0.99, 0.01)
        assert len(ts) == 99
        assert ts[0] == 0.01
        assert ts[-1] == 0.99
        assert ts[49] == 0.5

    def test_verification_grid(self):
        ts = t_grid(0.05, 0.95, 0.05)
        assert len(ts) == 19
        assert ts[9] == 0.5

    def test_single_point(self):
        assert t_grid(0.3, 0.3, 0.1) == [0.3]

    @pytest.mark.parametrize(
        "t_min,t_max,t_step",
        [(0.1, 0.9, 0.0), (0.1, 0.9, -0.1), (0.6, 0.4, 0.1), (-0.1, 0.5, 0.1), (0.0, 1.1, 0.1)],
    )
    def test_domain(self, t_min, t_max, t_step):
        with pytest.raises(DomainError):
            t_grid(t_min, t_max, t_step)


class TestEvaluatePoint:
    """Test single sweep rows."""

    def test_closed_row(self):
        row = evaluate_point(0.2, 0.25)
        assert row.source is SweepSource.CLOSED_FORM
        assert row.eta_prime == pytest.approx(3 / 7)
        assert row.g == pytest.approx(15 / 7)

    def test_brute_row_matches_closed(self):
        closed = evaluate_point(0.4, 0.3, SweepSource.CLOSED_FORM)
        brute = evaluate_point(0.4, 0.3, "brute")
        assert brute.source is SweepSource.BRUTE_FORCE
        for field in ("p1", "p2", "p_total", "eta_prime", "g"):
            assert getattr(brute, field) == pytest.approx(getattr(closed, field), abs=1e-10)

    @pytest.mark.parametrize("source", list(SweepSource))
    def test_undefined_values(self, source):
        assert evaluate_point(0.0, 0.3, source).g is None
        assert evaluate_point(1.0, 1.0, source).eta_prime is None

    def test_row_validation(self):
        with pytest.raises(ValidationError):
            SweepRow(eta=0.5, t=0.5, p1=0.1, p2=0.1, p_total=1.5, source="closed")


class TestSweep:
    """Test grid evaluation order and concurrency."""

    def test_order(self):
        rows = sweep([0.8, 0.2], [0.5, 0.1])
        assert [(r.eta, r.t) for r in rows] == [(0.2, 0.1), (0.2, 0.5), (0.8, 0.1), (0.8, 0.5)]

    def test_deterministic_across_threads(self):
        ts = t_grid(0.1, 0.9, 0.1)
        single = sweep([0.2, 0.4], ts, SweepSource.BRUTE_FORCE, max_threads=1)
        many = sweep([0.2, 0.4], ts, SweepSource.BRUTE_FORCE, max_threads=8)
        assert single == many

    async def test_async(self):
        rows = await sweep_async([0.4], [0.25, 0.5], max_threads=2)
        assert len(rows) == 2
        assert rows[1].g == pytest.approx(1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            sweep([1.5], [0.5])
