import numpy as np
import pytest

from fimpl import aggregations as agg
from fimpl.chains import (ChainMap, blend, chain_from_components, chain_from_names, check_breakpoints,
                          example_1ii, identity_chain, is_f_chain, named_chain, power, sin2,
                          smoothstep, threshold_chain, validate_component)
from fimpl.errors import InvalidArgument, InvalidChain
from fimpl.maps import UnaryMap, compose, constant, identity
from fimpl.negations import classical_negation, quadratic_negation
from fimpl.numerics import make_grid


class TestBuiltins:
    @pytest.mark.parametrize("kind, unit, zero, idem", [
        ("max", True, False, True), ("min", False, True, True), ("product", False, True, False),
        ("maxmin_mean", False, False, True),
    ])
    def test_flags(self, kind, unit, zero, idem):
        F = agg.builtin(kind, 3)
        assert (F.has_unit_multipliers, F.has_zero_multipliers, F.idempotent_on_diagonal) == (unit, zero, idem)

    def test_arity_one_has_no_multipliers(self):
        assert agg.maximum(1).has_unit_multipliers is False
        assert agg.product(1).has_zero_multipliers is False

    def test_weighted_mean_flags(self):
        assert not agg.weighted_mean([0.5, 0.5]).has_unit_multipliers
        w = agg.weighted_mean([1.0, 0.0])
        assert w.has_unit_multipliers and w.has_zero_multipliers

    def test_values(self):
        assert agg.weighted_mean([1 / 3] * 3)(0.3, 0.6, 0.9) == pytest.approx(0.6, abs=1e-15)
        assert agg.maxmin_mean()(0.2, 0.5, 0.8) == pytest.approx(0.5)
        assert agg.product(2)(0.5, 0.5) == 0.25

    @pytest.mark.parametrize("w", [[0.5, 0.6], [1.2, -0.2], []])
    def test_bad_weights(self, w):
        with pytest.raises(InvalidArgument):
            agg.weighted_mean(w)

    def test_weights_sum_message(self):
        with pytest.raises(InvalidArgument, match="sum to 1.1"):
            agg.weighted_mean([0.5, 0.6])

    def test_maxmin_mean_arity(self):
        with pytest.raises(InvalidArgument):
            agg.maxmin_mean(4)

    def test_call_arity_checked(self):
        with pytest.raises(InvalidArgument):
            agg.maximum(2)(0.1, 0.2, 0.3)

    def test_unknown(self):
        with pytest.raises(InvalidArgument):
            agg.builtin("median", 3)


class TestDuality:
    def test_maxmin_mean_self_dual(self):
        assert agg.is_self_n_dual(agg.maxmin_mean(), classical_negation()).holds

    def test_product_not_self_dual(self):
        v = agg.is_self_n_dual(agg.product(2), classical_negation())
        assert not v.holds and v.deviation >= 0.5
        assert agg.product(2)(0.5, 0.5) == 0.25 and 1 - agg.product(2)(0.5, 0.5) == 0.75

    def test_min_not_self_dual(self):
        N = classical_negation()
        assert not agg.is_self_n_dual(agg.minimum(2), N).holds
        assert agg.minimum(2)(N(0.2), N(0.8)) == pytest.approx(0.2)

    def test_mean_not_dual_for_quadratic(self):
        assert not agg.is_self_n_dual(agg.weighted_mean([0.5, 0.5]), quadratic_negation()).holds

    def test_random_sampling_for_large_arity(self):
        v = agg.is_self_n_dual(agg.weighted_mean([0.25] * 4), classical_negation())
        assert v.holds


class TestMultipliers:
    def test_max_unit(self):
        p = agg.find_multiplier(agg.maximum(2), "unit")
        assert p is not None and agg.is_unit_multiplier(agg.maximum(2), p)

    def test_mean_has_none(self):
        assert agg.find_multiplier(agg.weighted_mean([0.5, 0.25, 0.25]), "unit") is None

    def test_product_zero(self):
        p = agg.find_multiplier(agg.product(2), "zero")
        assert agg.product(2)(*p) == 0.0 and any(v != 0 for v in p)
        assert agg.is_zero_multiplier(agg.product(2), (0.0, 0.5))

    def test_bad_which(self):
        with pytest.raises(InvalidArgument):
            agg.find_multiplier(agg.maximum(2), "half")


class TestMaps:
    def test_identity_constant_compose(self):
        assert identity()(0.3) == 0.3
        assert constant(0.25)(np.array([0.0, 1.0])).tolist() == [0.25, 0.25]
        sq = power(2)
        assert compose(sq, sq)(0.5) == 0.0625


class TestChains:
    def test_valid(self):
        c = chain_from_components([power(2), identity()])
        assert isinstance(c, ChainMap) and c.n == 2 and len(c) == 2
        assert c(0.5).tolist() == [0.25, 0.5]

    def test_decreasing_component(self):
        with pytest.raises(InvalidChain, match="component 1") as info:
            chain_from_components([identity(), UnaryMap(lambda t: 1 - t, "1-t")])
        assert info.value.component == 1

    def test_decrease_inside(self):
        bump = UnaryMap(lambda t: np.where((t > 0.4) & (t < 0.5), 0.9, t), "bump")
        with pytest.raises(InvalidChain, match="decreases") as info:
            validate_component(bump)
        assert info.value.witness[0] < info.value.witness[1]

    def test_out_of_range_and_nan(self):
        with pytest.raises(InvalidChain, match="leaves"):
            validate_component(UnaryMap(lambda t: np.where(t == 1, 1.0, 2 * t), "2t"))
        with pytest.raises(InvalidChain, match="finite"):
            validate_component(UnaryMap(lambda t: np.where(t == 0.5, np.nan, t), "hole"))

    def test_f_chain(self):
        assert is_f_chain(chain_from_components([power(2), identity()]), agg.maximum(2)).holds
        assert is_f_chain(chain_from_components([power(0.5), power(0.5)]), agg.product(2)).holds
        v = is_f_chain(identity_chain(2), agg.product(2))
        assert not v.holds and v.witness == 0.5 and v.deviation == pytest.approx(0.25)

    def test_f_chain_arity_mismatch(self):
        with pytest.raises(InvalidArgument):
            is_f_chain(identity_chain(2), agg.maximum(3))

    def test_threshold_chain(self):
        c = threshold_chain([0, 0.5, 0.75, 1])
        assert c[1](0.6) == pytest.approx(0.4)
        assert c[0](0.6) == 1.0
        for comp in c:
            assert comp(0.0) == 0.0 and comp(1.0) == 1.0
        assert is_f_chain(c, agg.weighted_mean([0.5, 0.25, 0.25])).deviation <= 1e-15

    @pytest.mark.parametrize("e", [[0, 0.5, 0.5, 1], [0.1, 1], [0, 0.7, 0.6, 1], [0, 0.5]])
    def test_bad_breakpoints(self, e):
        with pytest.raises(InvalidArgument):
            check_breakpoints(e)

    def test_named(self):
        assert sin2()(0.5) == pytest.approx(0.5)
        t = make_grid(101).points
        assert np.max(np.abs(sin2()(t) + sin2()(1 - t) - 1)) <= 1e-15
        assert example_1ii()(0.6) == pytest.approx(0.7)
        assert named_chain("power_matrix", 1, 2)(0.5) == 0.125
        assert smoothstep()(0.5) == 0.5
        assert blend(0.5)(0.5) == 0.625
        with pytest.raises(InvalidArgument):
            power(0)
        with pytest.raises(InvalidArgument):
            blend(2)
        with pytest.raises(InvalidArgument):
            named_chain("spiral")

    def test_chain_from_names(self):
        c = chain_from_names(("power", 2), ("identity",))
        assert c(0.5).tolist() == [0.25, 0.5]
