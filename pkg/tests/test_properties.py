import json

import numpy as np
import pytest

from fimpl import aggregations as agg
from fimpl import fixtures as fx
from fimpl.chains import chain_from_components, identity_chain, power
from fimpl.construction import build
from fimpl.errors import InvalidArgument
from fimpl.implications import as_implication, catalog
from fimpl.negations import classical_negation, quadratic_negation, tnorm
from fimpl.numerics import Tolerance, make_grid
from fimpl.properties import (ESTABLISHED, FAILED, HOLDS, MAX_WITNESSES, PROPERTIES, VIOLATED,
                              PropertyContext, check_many, check_property, check_sufficiency,
                              power_commutes)

G = make_grid(101)
NC = PropertyContext(N=classical_negation())


class TestReports:
    def test_holds_report(self):
        r = check_property(catalog("LK"), "NP", G)
        assert r.verdict == HOLDS and r.holds and bool(r) and r.violation_count == 0 and r.witnesses == ()

    def test_violation_report_shape(self):
        r = check_property(catalog("KD"), "IP", G)
        assert r.verdict == VIOLATED and not r
        assert r.violation_count == 999 and r.grid_resolution == 1001  # unary checks sample densely
        assert len(r.witnesses) == MAX_WITNESSES
        assert r.witnesses[0] == {"x": 0.5, "y": 0.5, "value": 0.5, "expected": 1.0}

    def test_to_dict_is_json(self):
        d = check_property(catalog("GD"), "CP", G, NC).to_dict()
        assert set(d) == {"subject", "property", "verdict", "violation_count", "witnesses",
                          "grid_resolution", "tolerance", "context"}
        assert d["subject"] == "GD" and d["context"] == {"negation": "Nc"}
        assert json.loads(json.dumps(d)) == d

    def test_unknown_property(self):
        with pytest.raises(InvalidArgument, match="unknown property"):
            check_property(catalog("LK"), "XX", G)

    @pytest.mark.parametrize("prop", ["CP", "LCP", "RCP", "NATNEG"])
    def test_negation_required(self, prop):
        with pytest.raises(InvalidArgument, match="negation"):
            check_property(catalog("LK"), prop, G)

    def test_tnorm_required(self):
        with pytest.raises(InvalidArgument, match="t-norm"):
            check_property(catalog("LK"), "PIT", G)
        with pytest.raises(InvalidArgument, match="positive"):
            check_property(catalog("LK"), "PIT", G, PropertyContext(T=tnorm("product"), r_values=(0.0,)))

    def test_check_many(self):
        reps = check_many(catalog("LK"), ["NP", "IP", "OP"], G)
        assert [r.property for r in reps] == ["NP", "IP", "OP"] and all(reps)

    def test_every_property_runs(self):
        ctx = PropertyContext(N=classical_negation(), T=tnorm("minimum"))
        for p in PROPERTIES:
            check_property(catalog("RC"), p, make_grid(21), ctx)


class TestChecks:
    def test_tolerance_matters(self):
        sloppy = as_implication(lambda x, y: np.minimum(1.0, 1.0 - x + y) - 1e-13 * (x == y), "lk-")
        assert check_property(sloppy, "IP", G).holds
        assert not check_property(sloppy, "IP", G, tol=Tolerance(eps_eq=1e-14)).holds

    def test_monotonicity_is_strict_by_default(self):
        # at x=0.5 copy the x=0.49 column and add 1e-15, so I rises by a hair in x
        bumpy = as_implication(lambda x, y: np.where(x == 0.5, np.maximum(0.51, y) + 1e-15, np.maximum(1 - x, y)),
                               "kd+")
        assert not check_property(bumpy, "I1", G).holds
        assert check_property(bumpy, "I1", G, tol=Tolerance(eps_mono=1e-14)).holds

    def test_lt_lf(self):
        assert check_property(catalog("KD"), "LT", G).holds
        assert not check_property(catalog("GD"), "LT", G).holds
        assert check_property(catalog("LK"), "LF", G).holds
        assert not check_property(catalog("LEAST"), "LF", G).holds

    def test_contrapositions(self):
        Nq = PropertyContext(N=quadratic_negation())
        assert check_property(catalog("RC"), "CP", G, NC).holds
        assert not check_property(catalog("RC"), "CP", G, Nq).holds
        assert not check_property(catalog("GD"), "LCP", G, NC).holds

    def test_natural_negation(self):
        assert check_property(catalog("LK"), "NATNEG", G, NC).holds
        assert not check_property(catalog("GD"), "NATNEG", G, NC).holds

    def test_pit(self):
        prod = PropertyContext(T=tnorm("product"))
        assert check_property(catalog("RS"), "PIT", G, prod).holds
        assert not check_property(catalog("GG"), "PIT", G, prod).holds


class TestSufficiency:
    def test_cbnp_established(self):
        rep = check_sufficiency("NP", fx.cbnp())
        assert rep.established and rep.consistent and rep.conclusion_checked.holds
        d = rep.to_dict()
        assert set(d) == {"proposition", "property", "hypotheses", "all_established", "conclusion"}
        assert d["proposition"] == "consequent_boundary" and d["all_established"] is True
        assert all(h["status"] == ESTABLISHED for h in d["hypotheses"])

    def test_failed_hypothesis_is_reported(self):
        # identity is not a product-chain
        con = build(agg.product(2), identity_chain(2), identity_chain(2), [catalog("LK"), catalog("LK")])
        rep = check_sufficiency("NP", con)
        statuses = {h.condition: h.status for h in rep.hypotheses}
        assert FAILED in statuses.values() and not rep.established and rep.consistent
        bad = next(h for h in rep.hypotheses if h.status == FAILED)
        assert bad.condition == "c2 is an F-chain" and "t=0.5" in bad.detail

    def test_unknown(self):
        with pytest.raises(InvalidArgument, match="no sufficiency checker"):
            check_sufficiency("I1", fx.cbnp())

    def test_power_commutes(self):
        worst, where = power_commutes(power(2), tnorm("product"), (0.5, 2.0))
        assert worst <= 1e-12
        worst, where = power_commutes(power(2), tnorm("lukasiewicz"), (2.0,))
        assert worst > 0.1 and where[1] == 2.0


class TestCounterexamples:
    """Situations where plausible-looking claims turn out false on a grid."""

    def test_printed_example_table_is_the_chain_sum(self):
        # the tabulated formula equals c2(x) + c2(y) rather than the construction
        X, Y = G.mesh()
        c2 = fx.example_1ii().c2[1]
        assert np.max(np.abs(fx.example_1ii_printed_table(X, Y) - (c2(X) + c2(Y)))) <= 1e-12
        assert np.max(np.abs(fx.example_1ii_printed_table(X, Y) - fx.example_1ii()(X, Y))) > 0.1

    def test_op_fails_without_chain_match(self):
        con = build(agg.maximum(1), chain_from_components([power(2)]), chain_from_components([power(0.5)]),
                    [catalog("GD")])
        assert check_property(catalog("GD"), "OP", G).holds
        rep = check_property(con, "OP", G)
        assert not rep.holds
        assert con(0.5, 0.3) == 1.0 and 0.5 > 0.3

    def test_pit_fails_for_lukasiewicz(self):
        ctx = PropertyContext(T=tnorm("lukasiewicz"))
        assert not check_property(fx.pit_example(), "PIT", G, ctx).holds
        assert check_property(fx.pit_example(), "PIT", G, PropertyContext(T=tnorm("product"))).holds
