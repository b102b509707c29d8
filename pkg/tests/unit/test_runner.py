"""Unit tests for end-to-end protocol runs."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from timebin_amp.protocol import DetectorModel, ProtocolConfig, run_protocol

from ..conftest import COEFFICIENTS


class TestProtocolConfig:
    """Test run parameter validation."""

    def test_defaults(self):
        config = ProtocolConfig(eta=0.5, t=0.5)
        assert config.alpha == pytest.approx(1 / math.sqrt(2))
        assert config.detector_model is DetectorModel.NUMBER_RESOLVING

    def test_unnormalized_coefficients(self):
        with pytest.raises(ValidationError):
            ProtocolConfig(alpha=0.5, beta=0.5, eta=0.5, t=0.5)

    @pytest.mark.parametrize("field,value", [("eta", 1.2), ("t", -0.1), ("t", 1.5)])
    def test_out_of_range(self, field, value):
        params = {"eta": 0.5, "t": 0.5, field: value}
        with pytest.raises(ValidationError):
            ProtocolConfig(**params)

    def test_detector_from_string(self):
        assert ProtocolConfig(eta=0.5, t=0.5, detector_model="threshold").detector_model is DetectorModel.THRESHOLD


class TestRunProtocol:
    """Test aggregated probabilities, fidelity and gain."""

    def test_reference_point(self, reference_result):
        assert reference_result.p1 == pytest.approx(0.01171875, abs=1e-12)
        assert reference_result.p2 == pytest.approx(0.00390625, abs=1e-12)
        assert reference_result.p_total == pytest.approx(0.00546875, abs=1e-12)
        assert reference_result.eta_out == pytest.approx(3 / 7, abs=1e-12)
        assert reference_result.g == pytest.approx(15 / 7, abs=1e-12)

    def test_pattern_sums(self, reference_result):
        assert len(reference_result.per_pattern) == 16
        assert math.fsum(o.prob_entangled for o in reference_result.per_pattern) == pytest.approx(
            reference_result.p1, abs=1e-12
        )
        assert math.fsum(o.prob_vacuum for o in reference_result.per_pattern) == pytest.approx(
            reference_result.p2, abs=1e-12
        )

    def test_output_fidelity(self, reference_result):
        assert reference_result.output_fidelity == pytest.approx(1.0, abs=1e-10)
        assert all(o.fidelity == pytest.approx(1.0, abs=1e-10) for o in reference_result.per_pattern)

    def test_conditioned_output(self, reference_result):
        mixed = reference_result.conditioned_output
        assert mixed is not None
        assert len(mixed) == 2
        assert mixed.weights == pytest.approx((3 / 7, 4 / 7), abs=1e-12)
        assert mixed.states[1].photon_numbers() == frozenset({0})

    def test_lookup(self, reference_result, reference_pattern):
        outcome = reference_result.lookup(reference_pattern)
        assert outcome.correction_label == "none"

    @pytest.mark.parametrize("eta", [0.0, 0.2, 0.4, 0.8, 1.0])
    def test_maximum_at_half(self, eta):
        assert run_protocol(ProtocolConfig(eta=eta, t=0.5)).p_total == pytest.approx(1 / 16, abs=1e-12)

    def test_no_vacuum_branch(self):
        result = run_protocol(ProtocolConfig(eta=1.0, t=0.3))
        assert result.eta_out == pytest.approx(1.0)
        assert result.g == pytest.approx(1.0)

    def test_gain_undefined_without_entanglement(self):
        result = run_protocol(ProtocolConfig(eta=0.0, t=0.3))
        assert result.fidelity_defined
        assert result.eta_out == 0.0
        assert result.g is None

    def test_nothing_heralded(self):
        result = run_protocol(ProtocolConfig(eta=0.4, t=0.0))
        assert result.p_total == 0.0
        assert not result.fidelity_defined
        assert result.eta_out == 0.0
        assert result.g is None
        assert result.conditioned_output is None

    def test_coefficient_independence(self):
        results = [run_protocol(ProtocolConfig(alpha=a, beta=b, eta=0.4, t=0.3)) for a, b in COEFFICIENTS]
        assert float(np.std([r.p1 for r in results])) <= 1e-12
        assert float(np.std([r.eta_out for r in results])) <= 1e-12
        assert all(r.output_fidelity == pytest.approx(1.0, abs=1e-10) for r in results)

    def test_threshold_degradation(self):
        resolving = run_protocol(ProtocolConfig(eta=0.5, t=0.25))
        threshold = run_protocol(ProtocolConfig(eta=0.5, t=0.25, detector_model="threshold"))
        assert threshold.p1 > resolving.p1
        assert threshold.output_fidelity < 1.0

    def test_serialization(self, reference_result):
        payload = reference_result.model_dump(mode="json")
        assert payload["per_pattern"][0]["pattern"] == "D1aD2a-D1bD2b"
        assert payload["config"]["detector_model"] == "number-resolving"
        weights = [b["weight"] for b in payload["conditioned_output"]]
        assert sum(weights) == pytest.approx(1.0)
        assert "|vac>" in payload["conditioned_output"][1]["state"]
