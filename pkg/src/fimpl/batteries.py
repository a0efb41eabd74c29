"""Seeded random instances for the randomized acceptance batteries.

Each proposition generator only draws from families known to satisfy the
proposition's hypotheses, so a failure means either a bug or a genuine
counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import aggregations as agg
from .chains import (ChainMap, blend, chain_from_components, power, sin2, smoothstep,
                     threshold_chain, threshold_component)
from .construction import build
from .implications import (catalog, n_reciprocation, sn_implication, yager_sn, zero_both,
                           zero_lower, zero_upper)
from .maps import identity
from .negations import (classical_negation, drastic_lower_negation, drastic_upper_negation,
                        max_tconorm, probabilistic_sum, quadratic_negation, tnorm)
from .numerics import make_grid
from .properties import PropertyContext, check_axioms, check_sufficiency

BATTERY_RESOLUTION = 51


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def _weights(rng, n):
    w = rng.dirichlet(np.ones(n))
    w = np.maximum(w, 0.02)
    w = w / w.sum()
    w[-1] = 1.0 - float(np.sum(w[:-1]))
    return [float(v) for v in w]


def random_aggregator(rng, n, no_unit=False, no_zero=False) -> agg.Aggregator:
    kinds = ["max", "min", "prod", "wmean"] + (["maxminmean"] if n == 3 else [])
    if no_unit:
        kinds = [k for k in kinds if k != "max" or n == 1]
    if no_zero:
        kinds = [k for k in kinds if k not in ("min", "prod") or n == 1]
    kind = _pick(rng, kinds)
    if kind == "wmean":
        return agg.weighted_mean(_weights(rng, n))
    return agg.builtin(kind, n)


def _strict_component(rng):
    """A strictly increasing component with values in (0, 1) on (0, 1)."""
    choice = int(rng.integers(5))
    if choice == 0:
        return identity()
    if choice == 1:
        return power(float(np.exp(rng.uniform(np.log(0.25), np.log(4.0)))))
    if choice == 2:
        return blend(float(rng.uniform(-0.95, 0.95)))
    return sin2() if choice == 3 else smoothstep()


def random_component(rng, open_range=False):
    if not open_range and rng.random() < 0.2:
        lo = float(rng.uniform(0.0, 0.6))
        return threshold_component(lo, float(rng.uniform(lo + 0.1, 1.0)))
    return _strict_component(rng)


def random_chain(rng, n, open_range=False) -> ChainMap:
    return chain_from_components([random_component(rng, open_range) for _ in range(n)])


def random_f_chain(rng, F: agg.Aggregator) -> ChainMap:
    """A chain c with F(c(t)) = t, built for the given builtin."""
    n = F.arity
    if F.name in ("max", "min"):
        k = int(rng.integers(n))
        comps = []
        for j in range(n):
            if j == k:
                comps.append(identity())
            elif F.name == "max":
                comps.append(power(float(rng.uniform(1.0, 4.0))) if rng.random() < 0.5
                             else blend(float(rng.uniform(-1.0, 0.0))))
            else:
                comps.append(power(float(rng.uniform(0.25, 1.0))) if rng.random() < 0.5
                             else blend(float(rng.uniform(0.0, 1.0))))
        return chain_from_components(comps)
    if F.name == "prod":
        p = rng.dirichlet(np.ones(n))
        p[-1] = 1.0 - float(np.sum(p[:-1]))
        return chain_from_components([power(float(v)) for v in p])
    if F.name == "maxminmean":
        a = float(rng.uniform(0.0, 1.0))
        b = float(rng.uniform(-a, a))
        return chain_from_components([blend(-a), blend(a), blend(b)])
    if F.name == "wmean":
        w = np.asarray(F.params)
        mode = int(rng.integers(3))
        if mode == 0 and n > 1:
            e = np.concatenate([[0.0], np.cumsum(w)])
            e[-1] = 1.0
            return threshold_chain(e)
        if mode == 1:
            return chain_from_components([identity() for _ in range(n)])
        b = rng.uniform(-1.0, 1.0, n)
        a = b - float(np.dot(w, b))
        scale = float(np.max(np.abs(a)))
        a = a / scale if scale > 1.0 else a
        return chain_from_components([blend(float(v)) for v in a])
    raise ValueError(f"no F-chain generator for {F.name}")


def _np_cb_pool(rng):
    base = [catalog(k) for k in ("LK", "KD", "RC", "GD", "GG")]
    base += [yager_sn(float(rng.uniform(0.3, 3.0))), sn_implication(max_tconorm(), quadratic_negation())]
    I = _pick(rng, base)
    return zero_lower(I) if rng.random() < 0.2 else I


def random_implication(rng):
    """Any implication from the catalog or a transform of one."""
    pool = [catalog(k) for k in ("LK", "KD", "RC", "GD", "GG", "RS", "LG", "GREATEST", "LEAST")]
    pool += [yager_sn(float(rng.uniform(0.3, 3.0))),
             sn_implication(probabilistic_sum(), quadratic_negation())]
    I = _pick(rng, pool)
    r = rng.random()
    if r < 0.1:
        return n_reciprocation(I, _pick(rng, [classical_negation(), quadratic_negation()]))
    if r < 0.2:
        return _pick(rng, [zero_lower, zero_upper, zero_both])(I)
    return I


def random_construction(rng):
    n = int(rng.integers(1, 4))
    F = random_aggregator(rng, n)
    return build(F, random_chain(rng, n), random_chain(rng, n),
                 [random_implication(rng) for _ in range(n)])


# -- proposition instances ---------------------------------------------------

def _dominated_pair(rng, n, shared=False):
    """(c1, c2) with c1_j <= c2_j; with ``shared`` one component is common."""
    c1, c2 = [], []
    k = int(rng.integers(n)) if shared else -1
    for j in range(n):
        mode = int(rng.integers(3))
        if j == k or mode == 0:
            f = _strict_component(rng) if j == k else random_component(rng)
            c1.append(f)
            c2.append(f)
        elif mode == 1:
            k2 = float(np.exp(rng.uniform(np.log(0.25), np.log(2.0))))
            c1.append(power(k2 * float(rng.uniform(1.25, 2.0))))
            c2.append(power(k2))
        else:
            a2 = float(rng.uniform(-0.5, 1.0))
            c1.append(blend(float(rng.uniform(-1.0, a2 - 0.25))))
            c2.append(blend(a2))
    return chain_from_components(c1), chain_from_components(c2)


def _gen_consequent_boundary(rng):
    n = int(rng.integers(1, 4))
    F = random_aggregator(rng, n)
    con = build(F, random_chain(rng, n), random_f_chain(rng, F), [_np_cb_pool(rng) for _ in range(n)])
    return con, _pick(rng, ["NP", "CB"]), None


def _gen_natural_negation(rng):
    n = int(rng.integers(1, 4))
    Nc = classical_negation()
    F = agg.maxmin_mean() if n == 3 and rng.random() < 0.5 else agg.weighted_mean(_weights(rng, n))
    pool = [catalog("LK"), catalog("KD"), catalog("RC"), yager_sn(float(rng.uniform(0.3, 3.0)))]
    con = build(F, random_f_chain(rng, F), random_chain(rng, n), [_pick(rng, pool) for _ in range(n)])
    return con, "NATNEG", PropertyContext(N=Nc)


def _ip_op_pool(rng, op):
    names = ("LK", "GD", "GG", "RS", "LG") + (() if op else ("GREATEST",))
    I = catalog(_pick(rng, names))
    if rng.random() < 0.25:
        I = _pick(rng, [zero_lower, zero_upper, zero_both])(I)
    return I


def _gen_identity_principle(rng):
    n = int(rng.integers(1, 4))
    c1, c2 = _dominated_pair(rng, n)
    con = build(random_aggregator(rng, n), c1, c2, [_ip_op_pool(rng, False) for _ in range(n)])
    return con, "IP", None


def _gen_ordering_property(rng):
    n = int(rng.integers(1, 4))
    c1, c2 = _dominated_pair(rng, n, shared=True)
    con = build(random_aggregator(rng, n, no_unit=True), c1, c2, [_ip_op_pool(rng, True) for _ in range(n)])
    return con, "OP", None


def _gen_contrapositions(rng):
    n = int(rng.integers(1, 4))
    c = chain_from_components([_pick(rng, [identity, sin2, smoothstep])() for _ in range(n)])
    pool = [catalog("LK"), catalog("KD"), catalog("RC"), catalog("GREATEST"), catalog("LEAST"),
            yager_sn(float(rng.uniform(0.3, 3.0)))]
    con = build(random_aggregator(rng, n), c, c, [_pick(rng, pool) for _ in range(n)])
    return con, _pick(rng, ["CP", "LCP", "RCP"]), PropertyContext(N=classical_negation())


def _gen_lowest_truth(rng):
    n = int(rng.integers(1, 4))
    Nq = quadratic_negation()
    pool = [catalog("KD"), catalog("RC"), catalog("LEAST"),
            sn_implication(max_tconorm(), Nq), sn_implication(probabilistic_sum(), Nq)]
    impls = []
    for _ in range(n):
        I = _pick(rng, pool)
        impls.append(_pick(rng, [zero_lower, zero_upper, zero_both])(I) if rng.random() < 0.25 else I)
    con = build(random_aggregator(rng, n, no_unit=True), random_chain(rng, n, True),
                random_chain(rng, n, True), impls)
    return con, "LT", None


def _gen_lowest_falsity(rng):
    n = int(rng.integers(1, 4))
    pool = [catalog("LK"), catalog("KD"), catalog("RC"), catalog("GREATEST"),
            yager_sn(float(rng.uniform(0.3, 3.0)))]
    con = build(random_aggregator(rng, n, no_zero=True), random_chain(rng, n, True),
                random_chain(rng, n, True), [_pick(rng, pool) for _ in range(n)])
    return con, "LF", None


def _gen_power_invariance(rng):
    n = int(rng.integers(1, 4))

    def powers():
        return chain_from_components([power(float(np.exp(rng.uniform(np.log(0.25), np.log(4.0)))))
                                      for _ in range(n)])

    pool = [catalog(k) for k in ("RS", "LG", "GREATEST", "LEAST")]
    impls = []
    for _ in range(n):
        I = _pick(rng, pool)
        r = rng.random()
        if r < 0.2:
            I = _pick(rng, [zero_lower, zero_upper, zero_both])(I)
        elif r < 0.3:
            I = n_reciprocation(I, _pick(rng, [drastic_lower_negation(), drastic_upper_negation()]))
        impls.append(I)
    con = build(random_aggregator(rng, n), powers(), powers(), impls)
    return con, "PIT", PropertyContext(T=tnorm("product"), r_values=(0.5, 1.0, 2.0, 3.0))


PROPOSITION_GENERATORS = {
    "consequent_boundary": _gen_consequent_boundary,
    "natural_negation": _gen_natural_negation,
    "identity_principle": _gen_identity_principle,
    "ordering_property": _gen_ordering_property,
    "contrapositions": _gen_contrapositions,
    "lowest_truth": _gen_lowest_truth,
    "lowest_falsity": _gen_lowest_falsity,
    "power_invariance": _gen_power_invariance,
}


@dataclass
class BatteryResult:
    name: str
    count: int
    failures: list = field(default_factory=list)
    not_established: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.not_established

    def summary(self) -> str:
        return (f"{self.name}: {self.count} instances, {len(self.failures)} failures, "
                f"{len(self.not_established)} with unestablished hypotheses")


def run_theorem_battery(count: int = 200, seed: int = 20240601,
                        resolution: int = BATTERY_RESOLUTION) -> BatteryResult:
    rng = np.random.default_rng(seed)
    grid = make_grid(resolution)
    out = BatteryResult("theorem", count)
    for k in range(count):
        con = random_construction(rng)
        bad = [r for r in check_axioms(con, grid) if not r.holds]
        if bad:
            out.failures.append((k, repr(con), [r.to_dict() for r in bad]))
    return out


def run_proposition_battery(name: str, count: int = 50, seed: int = 7,
                            resolution: int = BATTERY_RESOLUTION) -> BatteryResult:
    gen = PROPOSITION_GENERATORS[name]
    rng = np.random.default_rng([seed, sorted(PROPOSITION_GENERATORS).index(name)])
    grid = make_grid(resolution)
    out = BatteryResult(name, count)
    for k in range(count):
        con, prop, ctx = gen(rng)
        rep = check_sufficiency(prop, con, ctx, grid)
        if not rep.established:
            out.not_established.append((k, repr(con), [h.to_dict() for h in rep.hypotheses
                                                        if h.status != "established"]))
        elif not rep.conclusion_checked.holds:
            out.failures.append((k, repr(con), rep.conclusion_checked.to_dict()))
    return out
