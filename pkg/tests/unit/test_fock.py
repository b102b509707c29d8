"""Unit tests for mode labels and sparse Fock states."""

import math

import pytest

from timebin_amp.errors import ModeOverlapError, ZeroStateError
from timebin_amp.fock import (
    FockBasis,
    MixedState,
    ModeId,
    PureState,
    create_photon,
    inner_product,
    mode,
    normalize,
    same_ray,
    sublevels,
    tensor,
    total_photon_number,
)


class TestModeId:
    """Test mode labels and their ordering."""

    def test_interned_constructor(self):
        assert mode("a1", "S", "H") is mode("a1", "S", "H")

    def test_str(self, s_h_a1: ModeId):
        assert str(s_h_a1) == "S_H@a1"

    def test_natural_spatial_order(self):
        """a2 sorts before a10, S before L, H before V."""
        modes = [mode("a10", "S", "H"), mode("a2", "L", "V"), mode("a2", "S", "V"), mode("a2", "S", "H")]
        assert [str(m) for m in sorted(modes)] == ["S_H@a2", "S_V@a2", "L_V@a2", "S_H@a10"]

    def test_invalid_spatial_label(self):
        with pytest.raises(ValueError):
            ModeId("1a", "S", "H")

    def test_sublevels(self):
        assert len(sublevels("out1")) == 4
        assert {m.spatial for m in sublevels("out1")} == {"out1"}

    def test_with_spatial(self, s_h_a1: ModeId):
        moved = s_h_a1.with_spatial("a3")
        assert (moved.spatial, moved.bin, moved.pol) == ("a3", s_h_a1.bin, s_h_a1.pol)


class TestFockBasis:
    """Test occupation-number basis states."""

    def test_canonical_order(self):
        first = FockBasis.from_counts({mode("b1", "S", "H"): 1, mode("a1", "S", "H"): 1})
        second = FockBasis.from_counts({mode("a1", "S", "H"): 1, mode("b1", "S", "H"): 1})
        assert first == second
        assert hash(first) == hash(second)

    def test_zero_counts_dropped(self, s_h_a1):
        assert FockBasis.from_counts({s_h_a1: 0}).is_vacuum

    def test_negative_count_rejected(self, s_h_a1):
        with pytest.raises(ValueError):
            FockBasis.from_counts({s_h_a1: -1})

    def test_from_modes_repeats(self, s_h_a1):
        basis = FockBasis.from_modes([s_h_a1, s_h_a1])
        assert basis.count(s_h_a1) == 2
        assert total_photon_number(basis) == 2

    def test_restrict_and_exclude(self, two_photon_basis: FockBasis):
        merged = two_photon_basis.merge(FockBasis.from_modes([mode("out1", "S", "H")]))
        assert merged.restrict(frozenset({"out1"})) == FockBasis.from_modes([mode("out1", "S", "H")])
        assert merged.exclude(frozenset({"out1"})) == two_photon_basis

    def test_creation_sequence(self, s_h_a1, l_v_a1):
        basis = FockBasis.from_counts({s_h_a1: 2, l_v_a1: 1})
        assert basis.creation_sequence() == [s_h_a1, s_h_a1, l_v_a1]

    def test_str(self, two_photon_basis):
        assert str(two_photon_basis) == "|S_H@a2, L_V@a2>"
        assert str(FockBasis.vacuum()) == "|vac>"


class TestPureState:
    """Test sparse pure-state algebra."""

    def test_pruning(self, s_h_a1):
        state = PureState({FockBasis.from_modes([s_h_a1]): 1e-16})
        assert state.is_zero

    def test_terms_accumulate(self, s_h_a1):
        basis = FockBasis.from_modes([s_h_a1])
        state = PureState.from_terms([(basis, 0.5), (basis, 0.25)])
        assert state.amplitude(basis) == pytest.approx(0.75)

    def test_creation_operator_weight(self, s_h_a1):
        """a^dagger a^dagger |0> = sqrt2 |2>."""
        state = create_photon(create_photon(PureState.vacuum(), s_h_a1), s_h_a1)
        assert state.amplitude(FockBasis.from_counts({s_h_a1: 2})) == pytest.approx(math.sqrt(2))

    @pytest.mark.parametrize(
        "start",
        [PureState.vacuum(), PureState.single(mode("a1", "S", "H")), PureState.single(mode("a2", "L", "V"))],
        ids=["vacuum", "s_h_a1", "l_v_a2"],
    )
    def test_creation_operators_commute(self, start, s_h_a1, l_v_a1):
        """Operators on distinct modes commute, including on occupied modes."""
        ab = create_photon(create_photon(start, s_h_a1), l_v_a1)
        ba = create_photon(create_photon(start, l_v_a1), s_h_a1)
        assert ab == ba
        assert not ab.is_zero

    def test_arithmetic(self, s_h_a1, l_v_a1):
        a = PureState.single(s_h_a1)
        b = PureState.single(l_v_a1)
        combined = (a + b) / math.sqrt(2)
        assert combined.is_normalized()
        assert (combined - combined).is_zero
        assert (-a).amplitude(FockBasis.from_modes([s_h_a1])) == -1

    def test_inner_product_conjugate_symmetric(self, s_h_a1, l_v_a1):
        a = PureState.from_terms(
            [(FockBasis.from_modes([s_h_a1]), 0.6), (FockBasis.from_modes([l_v_a1]), 0.8j)]
        )
        b = PureState.from_terms(
            [(FockBasis.from_modes([s_h_a1]), 1j), (FockBasis.from_modes([l_v_a1]), 0.3)]
        )
        assert inner_product(a, b) == inner_product(b, a).conjugate()
        assert inner_product(a, a) == pytest.approx(1.0)

    def test_tensor_disjoint(self, s_h_a1):
        product = tensor(PureState.single(s_h_a1), PureState.single(mode("b1", "S", "H")))
        assert product.photon_numbers() == frozenset({2})

    def test_tensor_norm_is_product(self):
        first = PureState.from_terms(
            [
                (FockBasis.from_modes([mode("a1", "S", "H")]), 0.3 + 0.4j),
                (FockBasis.from_counts({mode("a1", "L", "V"): 2}), -1.2),
            ]
        )
        second = PureState.from_terms(
            [
                (FockBasis.vacuum(), 0.5),
                (FockBasis.from_modes([mode("b1", "S", "H"), mode("b2", "L", "V")]), 2j),
            ]
        )
        product = tensor(first, second)
        assert len(product) == 4
        assert product.norm() == pytest.approx(first.norm() * second.norm(), rel=1e-12)

    def test_tensor_overlap_rejected(self, s_h_a1):
        with pytest.raises(ModeOverlapError):
            tensor(PureState.single(s_h_a1), PureState.single(s_h_a1))

    def test_normalize(self, s_h_a1):
        norm, unit = normalize(PureState.single(s_h_a1, amplitude=2.0))
        assert norm == pytest.approx(2.0)
        assert unit.is_normalized()

    def test_normalize_zero(self):
        with pytest.raises(ZeroStateError):
            normalize(PureState.zero())

    def test_same_ray_ignores_global_phase(self, s_h_a1, l_v_a1):
        state = (PureState.single(s_h_a1) + PureState.single(l_v_a1)) / math.sqrt(2)
        assert same_ray(state, 1j * state)
        assert not same_ray(state, PureState.single(s_h_a1))

    def test_map_bases(self, s_h_a1):
        state = PureState.single(s_h_a1)
        moved = state.map_bases(lambda b: FockBasis.from_modes([m.with_spatial("a3") for m in b.modes]))
        assert moved.modes() == frozenset({mode("a3", "S", "H")})


class TestMixedState:
    """Test weighted ensembles."""

    def test_weights_must_sum_to_one(self, s_h_a1):
        with pytest.raises(ValueError):
            MixedState([(0.5, PureState.single(s_h_a1))])

    def test_branches_must_be_normalized(self, s_h_a1):
        with pytest.raises(ValueError):
            MixedState([(1.0, PureState.single(s_h_a1, amplitude=2.0))])

    def test_from_unnormalized_folds_norms(self, s_h_a1, l_v_a1):
        mixed = MixedState.from_unnormalized(
            [(1.0, PureState.single(s_h_a1, amplitude=math.sqrt(3))), (1.0, PureState.single(l_v_a1))]
        )
        assert mixed.weights == pytest.approx((0.75, 0.25))
        assert all(s.is_normalized() for s in mixed.states)

    def test_from_unnormalized_empty(self):
        with pytest.raises(ZeroStateError):
            MixedState.from_unnormalized([(1.0, PureState.zero())])

    def test_merged_combines_same_ray(self, s_h_a1, l_v_a1):
        a = PureState.single(s_h_a1)
        mixed = MixedState([(0.25, a), (0.25, -a), (0.5, PureState.single(l_v_a1))])
        merged = mixed.merged()
        assert len(merged) == 2
        assert merged.weights == pytest.approx((0.5, 0.5))
        assert not mixed.is_pure

    def test_fidelity_with(self, s_h_a1):
        vacuum = PureState.vacuum()
        photon = PureState.single(s_h_a1)
        mixed = MixedState([(0.3, photon), (0.7, vacuum)])
        assert mixed.fidelity_with(photon) == pytest.approx(0.3)
        assert MixedState.pure(photon).is_pure
