"""Classical construction methods, each stored twice: as a closed-form
evaluator and as the equivalent generalized F-chain construction.

Piecewise forms select branches with exact comparisons, following the
interval conventions

    horizontal threshold:  e_{j-1} <  y <= e_j
    vertical threshold:    e_{j-1} <= x <  e_j
    ordinal sum:           x in (e_{i-1}, e_i],  y in [e_{j-1}, e_j)

Affine branches are written as ``top - width * (1 - I)`` so that a branch
reaches its upper constant exactly when the inner implication returns 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import aggregations as agg
from .chains import check_breakpoints, identity_chain, threshold_chain
from .construction import Construction, build
from .errors import InvalidArgument
from .implications import (Implication, max_reciprocal_with_consequent,
                           max_with_negated_antecedent, n_reciprocation, zero_lower, zero_upper)
from .numerics import DEFAULT_TOL, Grid, Tolerance, as_array, make_grid

METHOD_KINDS = (
    "agg_max", "agg_min", "agg_convex", "agg_general",
    "contrap_upper", "contrap_lower", "contrap_medium",
    "threshold_horizontal", "threshold_vertical", "ordinal_sum_example",
)


@dataclass(frozen=True, eq=False)
class MethodInstance:
    direct: Implication
    via_construction: Construction
    method_kind: str
    params: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.direct.name

    def __call__(self, x, y):
        return self.direct(x, y)


def _names(impls):
    return ",".join(I.name for I in impls)


def _require_impls(impls, n=None):
    impls = tuple(impls)
    if not impls:
        raise InvalidArgument("at least one implication is required")
    if n is not None and len(impls) != n:
        raise InvalidArgument(f"expected {n} implications, got {len(impls)}")
    return impls


# -- aggregation -------------------------------------------------------------

def aggregation_method(kind: str, impls: Sequence, weights: Sequence[float] | None = None,
                       F: agg.Aggregator | None = None) -> MethodInstance:
    impls = _require_impls(impls)
    n = len(impls)
    if kind == "max":
        F = agg.maximum(n)
    elif kind == "min":
        F = agg.minimum(n)
    elif kind == "convex":
        if weights is None:
            raise InvalidArgument("convex aggregation needs weights")
        F = agg.weighted_mean(weights)
    elif kind == "general":
        if F is None:
            raise InvalidArgument("general aggregation needs an aggregation function")
    else:
        raise InvalidArgument(f"unknown aggregation method {kind!r}")
    if F.arity != n:
        raise InvalidArgument(f"{F.name} has arity {F.arity} but {n} implications were given")

    def direct(x, y):
        return F(*[as_array(I(x, y)) for I in impls])

    name = f"{kind}({_names(impls)})"
    con = build(F, identity_chain(n), identity_chain(n), impls, name)
    return MethodInstance(Implication(direct, name), con, f"agg_{kind}",
                          {"weights": tuple(F.params) if kind == "convex" else None})


# -- contrapositivisation ----------------------------------------------------

def contrapositivisation(kind: str, I, N) -> MethodInstance:
    name = f"{kind}({I.name},{N.name})"
    if kind == "upper":
        def direct(x, y):
            return np.minimum(as_array(I(x, y)), as_array(I(N(y), N(x))))
        F, pair = agg.minimum(2), (I, n_reciprocation(I, N))
    elif kind == "lower":
        def direct(x, y):
            return np.maximum(as_array(I(x, y)), as_array(I(N(y), N(x))))
        F, pair = agg.maximum(2), (I, n_reciprocation(I, N))
    elif kind == "medium":
        def direct(x, y):
            a = np.maximum(as_array(I(x, y)), as_array(N(x)))
            b = np.maximum(as_array(I(N(y), N(x))), y)
            return np.minimum(a, b)
        F = agg.minimum(2)
        pair = (max_with_negated_antecedent(I, N), max_reciprocal_with_consequent(I, N))
    else:
        raise InvalidArgument(f"unknown contrapositivisation {kind!r}")
    con = build(F, identity_chain(2), identity_chain(2), pair, name)
    return MethodInstance(Implication(direct, name), con, f"contrap_{kind}", {"N": N.name})


# -- threshold methods -------------------------------------------------------

def horizontal_threshold(e: Sequence[float], impls: Sequence) -> MethodInstance:
    e = check_breakpoints(e, "thresholds")
    n = len(e) - 1
    impls = _require_impls(impls, n)
    ea = np.asarray(e)
    w = np.diff(ea)

    def direct(x, y):
        out = np.ones_like(x)
        live = (x > 0.0) & (y < 1.0)
        bottom = live & (y == 0.0)
        out[bottom] = e[1] * as_array(impls[0](x[bottom], 0.0 * x[bottom]))
        j = np.searchsorted(ea, y, side="left")
        for k in range(1, n + 1):
            m = live & (y > 0.0) & (j == k)
            if not m.any():
                continue
            s = (y[m] - e[k - 1]) / w[k - 1]
            out[m] = e[k] - w[k - 1] * (1.0 - as_array(impls[k - 1](x[m], s)))
        return out

    name = f"hthreshold({_names(impls)})"
    con = build(agg.weighted_mean(w), identity_chain(n), threshold_chain(e),
                [impls[0]] + [zero_lower(I) for I in impls[1:]], name)
    return MethodInstance(Implication(direct, name, exact=True), con, "threshold_horizontal", {"e": e})


def vertical_threshold(e: Sequence[float], theta: Sequence[float], impls: Sequence) -> MethodInstance:
    e = check_breakpoints(e, "thresholds")
    n = len(e) - 1
    th = tuple(float(v) for v in theta)
    if len(th) != n + 1:
        raise InvalidArgument(f"theta needs {n + 1} entries to match the thresholds, got {len(th)}")
    if th[0] != 1.0 or th[-1] != 0.0 or any(b >= a for a, b in zip(th, th[1:])):
        raise InvalidArgument(f"theta must decrease strictly from 1 to 0, got {th}")
    impls = _require_impls(impls, n)
    ea = np.asarray(e)
    w = np.diff(ea)
    d = -np.diff(np.asarray(th))

    def direct(x, y):
        out = np.ones_like(x)
        live = (x > 0.0) & (y < 1.0)
        right = live & (x == 1.0)
        # same rounding path as the last block, so I1 holds exactly at x=1
        out[right] = th[n - 1] - d[n - 1] * (1.0 - as_array(impls[n - 1](1.0 + 0.0 * y[right], y[right])))
        j = np.searchsorted(ea, x, side="right")
        for k in range(1, n + 1):
            m = live & (x < 1.0) & (j == k)
            if not m.any():
                continue
            s = (x[m] - e[k - 1]) / w[k - 1]
            out[m] = th[k - 1] - d[k - 1] * (1.0 - as_array(impls[k - 1](s, y[m])))
        return out

    name = f"vthreshold({_names(impls)})"
    con = build(agg.weighted_mean(d), threshold_chain(e), identity_chain(n),
                [zero_upper(I) for I in impls[:-1]] + [impls[-1]], name)
    return MethodInstance(Implication(direct, name, exact=True), con, "threshold_vertical",
                          {"e": e, "theta": th})


def ordinal_sum_example(e: Sequence[float], impls: Sequence) -> MethodInstance:
    e = check_breakpoints(e, "breakpoints")
    n = len(e) - 1
    impls = _require_impls(impls, n)
    ea = np.asarray(e)
    w = np.diff(ea)

    def direct(x, y):
        out = np.ones_like(x)
        live = (x > 0.0) & (y < 1.0)
        i = np.searchsorted(ea, x, side="left")
        j = np.searchsorted(ea, y, side="right")
        for a in range(1, n + 1):
            on_row = live & (i == a)
            if not on_row.any():
                continue
            sx = (x - e[a - 1]) / w[a - 1]
            diag = on_row & (j == a)
            if diag.any():
                sy = (y[diag] - e[a - 1]) / w[a - 1]
                out[diag] = 1.0 - w[a - 1] * (1.0 - as_array(impls[a - 1](sx[diag], sy)))
            for b in range(1, a):
                m = on_row & (j == b)
                if not m.any():
                    continue
                sy = (y[m] - e[b - 1]) / w[b - 1]
                upper = as_array(impls[b - 1](1.0 + 0.0 * sy, sy))
                lower = as_array(impls[a - 1](sx[m], 0.0 * sy))
                out[m] = 1.0 + e[b - 1] - e[a] + w[b - 1] * upper + w[a - 1] * lower
        return out

    name = f"osum({_names(impls)})"
    c = threshold_chain(e)
    con = build(agg.weighted_mean(w), c, c, impls, name)
    return MethodInstance(Implication(direct, name, exact=True), con, "ordinal_sum_example", {"e": e})


# -- equivalence -------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    method_kind: str
    name: str
    deviation: float
    worst_point: tuple
    resolution: int
    tolerance: float

    @property
    def holds(self) -> bool:
        return self.deviation <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "method_kind": self.method_kind,
            "max_deviation": self.deviation,
            "worst_point": list(self.worst_point),
            "grid_resolution": self.resolution,
            "tolerance": self.tolerance,
            "verdict": "equivalent" if self.holds else "exceeded",
        }


def check_equivalence(m: MethodInstance, grid: Grid | None = None,
                      tol: Tolerance = DEFAULT_TOL) -> EquivalenceReport:
    grid = grid or make_grid(101)
    X, Y = grid.mesh()
    dev = np.abs(as_array(m.direct(X, Y)) - as_array(m.via_construction(X, Y)))
    k = np.unravel_index(int(np.argmax(dev)), dev.shape)
    return EquivalenceReport(m.method_kind, m.name, float(dev[k]),
                             (float(X[k]), float(Y[k])), grid.resolution, tol.eps_eq)


def complementary_theta(e: Sequence[float]) -> tuple:
    """theta_i = 1 - e_i, the choice that makes the vertical chain an F-chain."""
    return tuple(1.0 - v for v in e)

