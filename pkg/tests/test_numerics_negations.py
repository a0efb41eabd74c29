import math

import numpy as np
import pytest

from fimpl.errors import InvalidArgument
from fimpl.negations import (NEGATIONS, classical_negation, drastic_lower_negation,
                             drastic_upper_negation, make_negation, max_tconorm, negation_by_name,
                             probabilistic_sum, quadratic_negation, tnorm, tnorm_power, yager_tconorm)
from fimpl.numerics import Tolerance, approx_eq, check_unit_interval, make_grid


class TestGrid:
    def test_points_and_breakpoints(self):
        g = make_grid(101)
        assert len(g) == 101 and g.points[0] == 0.0 and g.points[-1] == 1.0
        assert 0.5 in g.points and 0.75 in g.points and 0.25 in g.points

    def test_mesh_is_row_major_in_x(self):
        X, Y = make_grid(3).mesh()
        assert X[2, 0] == 1.0 and Y[0, 2] == 1.0

    def test_interior(self):
        assert list(make_grid(5).interior()) == [0.25, 0.5, 0.75]

    @pytest.mark.parametrize("bad", [1, 0, -3, 2.5, True])
    def test_bad_resolution(self, bad):
        with pytest.raises(InvalidArgument):
            make_grid(bad)

    def test_points_are_read_only(self):
        with pytest.raises(ValueError):
            make_grid(4).points[0] = 0.5


class TestTolerance:
    def test_defaults(self):
        t = Tolerance()
        assert t.eps_eq == 1e-12 and t.eps_mono == 0.0

    def test_negative_rejected(self):
        with pytest.raises(InvalidArgument):
            Tolerance(eps_eq=-1)

    def test_approx_eq(self):
        assert approx_eq(0.1 + 0.2, 0.3)
        assert not approx_eq(0.3, 0.3 + 1e-9)
        with pytest.raises(InvalidArgument):
            approx_eq(math.nan, 0.0)

    def test_unit_interval(self):
        check_unit_interval(0.0, np.array([0.5, 1.0]))
        with pytest.raises(InvalidArgument):
            check_unit_interval(1.5)
        with pytest.raises(InvalidArgument):
            check_unit_interval(np.array([0.2, math.nan]))


class TestNegations:
    def test_classical_strong(self):
        N = classical_negation()
        assert N.is_strong and N(0.25) == 0.75

    def test_quadratic_not_strong(self):
        N = quadratic_negation()
        assert not N.is_strong and N(0.5) == 0.75

    def test_drastic(self):
        assert drastic_lower_negation()(0.0) == 1.0 and drastic_lower_negation()(1e-9) == 0.0
        assert drastic_upper_negation()(0.999) == 1.0 and drastic_upper_negation()(1.0) == 0.0

    def test_lookup(self):
        for key in NEGATIONS:
            assert negation_by_name(key).name in ("Nc", "Nq", "ND1", "ND2")
        assert negation_by_name("Nc").name == "Nc"
        with pytest.raises(InvalidArgument):
            negation_by_name("nope")

    @pytest.mark.parametrize("fn, msg", [
        (lambda x: x, "N\\(0\\)=1"),
        (lambda x: 1 - x + 0.5 * x * (1 - x) * 4, "leaves"),
        (lambda x: np.where(x < 0.5, 1 - x, np.where(x < 0.6, 0.9 - x + 0.3, 1 - x)), "increases"),
    ])
    def test_invalid(self, fn, msg):
        with pytest.raises(InvalidArgument, match=msg):
            make_negation(fn, "bad")


class TestTNorms:
    def test_values(self):
        assert tnorm("minimum")(0.3, 0.6) == 0.3
        assert tnorm("product")(0.5, 0.5) == 0.25
        assert tnorm("lukasiewicz")(0.3, 0.6) == 0.0
        assert tnorm("lukasiewicz")(0.75, 0.5) == 0.25

    def test_unknown(self):
        with pytest.raises(InvalidArgument):
            tnorm("drastic")

    def test_powers(self):
        assert tnorm_power(tnorm("product"), 0.25, 0.5) == 0.5
        assert tnorm_power(tnorm("minimum"), 0.3, 7) == 0.3
        assert tnorm_power(tnorm("lukasiewicz"), 0.8, 2) == pytest.approx(0.6)
        assert tnorm_power(tnorm("lukasiewicz"), 0.4, 2) == 0.0
        with pytest.raises(InvalidArgument):
            tnorm_power(tnorm("product"), 0.5, 0)

    def test_integer_power_matches_iteration(self):
        for kind in ("minimum", "product", "lukasiewicz"):
            T = tnorm(kind)
            for x in (0.2, 0.55, 0.9):
                assert T.power(x, 3) == pytest.approx(T(T(x, x), x), abs=1e-15)


class TestConorms:
    def test_yager(self):
        S = yager_tconorm(2)
        assert S(0.6, 0.8) == 1.0
        assert S(0.3, 0.4) == pytest.approx(0.5)
        assert yager_tconorm(1)(0.2, 0.3) == pytest.approx(0.5)
        with pytest.raises(InvalidArgument):
            yager_tconorm(0)

    def test_max_and_probsum(self):
        assert max_tconorm()(0.2, 0.7) == 0.7
        assert probabilistic_sum()(0.5, 0.5) == 0.75
        assert probabilistic_sum()(0.3, 1.0) == 1.0
