"""Grid verification of the implication axioms, the additional properties,
and the sufficient conditions that guarantee their preservation by the
generalized F-chain construction.

Property identifiers::

    I1 I2 I3                 axioms (antitone in x, isotone in y, corners)
    NP  I(1, y) = y          IP  I(x, x) = 1
    OP  I(x, y) = 1 <=> x <= y
    CB  I(x, y) >= y
    LF  I(x, y) = 0 <=> x = 1 and y = 0
    LT  I(x, y) = 1 <=> x = 0 or y = 1
    CP  I(x, y) = I(N(y), N(x))
    LCP I(N(x), y) = I(N(y), x)
    RCP I(x, N(y)) = I(y, N(x))
    PIT I(x, y) = I(x_T^(r), y_T^(r))   where both powers are non-zero
    NATNEG  I(x, 0) = N(x)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .aggregations import is_self_n_dual
from .chains import VALIDATION_SAMPLES, is_f_chain
from .errors import InvalidArgument
from .negations import ContinuousTNorm, Negation, tnorm_power
from .numerics import DEFAULT_TOL, Grid, Tolerance, as_array, make_grid

PROPERTIES = ("I1", "I2", "I3", "NP", "IP", "OP", "CB", "LF", "LT", "CP", "LCP", "RCP", "PIT", "NATNEG")
UNARY_PROPERTIES = ("NP", "IP", "NATNEG")
NEEDS_NEGATION = ("CP", "LCP", "RCP", "NATNEG")
DEFAULT_R_VALUES = (0.5, 1.0, 2.0, 3.0)
DEFAULT_RESOLUTION = 101
MAX_WITNESSES = 10

HOLDS = "holds_on_grid"
VIOLATED = "violated"


@dataclass(frozen=True)
class PropertyContext:
    N: Optional[Negation] = None
    T: Optional[ContinuousTNorm] = None
    r_values: tuple = DEFAULT_R_VALUES

    def describe(self) -> dict:
        out = {}
        if self.N is not None:
            out["negation"] = self.N.name
        if self.T is not None:
            out["tnorm"] = self.T.name
            out["r_values"] = list(self.r_values)
        return out


@dataclass(frozen=True)
class PropertyReport:
    property: str
    verdict: str
    witnesses: tuple
    violation_count: int
    grid_resolution: int
    tolerance: float
    subject: str = ""
    context: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "property": self.property,
            "verdict": self.verdict,
            "violation_count": self.violation_count,
            "witnesses": [dict(w) for w in self.witnesses],
            "grid_resolution": self.grid_resolution,
            "tolerance": self.tolerance,
            "context": dict(self.context),
        }


def _report(prop, bad, columns, resolution, tol, subject, context) -> PropertyReport:
    """Assemble a report from a violation mask and same-shaped named columns."""
    bad = np.asarray(bad, dtype=bool).ravel()
    idx = np.nonzero(bad)[0]
    flat = {k: as_array(v).ravel() for k, v in columns.items()}
    # worst offenders first, grid order among ties
    ref = flat.get("expected", flat.get("previous"))
    if ref is not None and idx.size:
        gap = np.abs(flat["value"][idx] - ref[idx])
        idx = idx[np.argsort(-gap, kind="stable")]
    witnesses = tuple({k: float(v[i]) for k, v in flat.items()} for i in idx[:MAX_WITNESSES])
    return PropertyReport(prop, VIOLATED if idx.size else HOLDS, witnesses, int(idx.size),
                          resolution, tol.eps_eq, getattr(subject, "name", str(subject)), context)


def _is_one(v, exact, tol):
    return v == 1.0 if exact else np.abs(v - 1.0) <= tol.eps_eq


def _is_zero(v, exact, tol):
    return v == 0.0 if exact else np.abs(v) <= tol.eps_eq


def _need_n(prop, ctx):
    if ctx is None or ctx.N is None:
        raise InvalidArgument(f"{prop} needs a negation in its context")
    return ctx.N


def _need_t(ctx):
    if ctx is None or ctx.T is None:
        raise InvalidArgument("PIT needs a t-norm in its context")
    if not ctx.r_values or any(not r > 0 for r in ctx.r_values):
        raise InvalidArgument(f"PIT needs positive r-values, got {ctx.r_values}")
    return ctx.T


def check_axioms(I, grid: Grid | None = None, tol: Tolerance = DEFAULT_TOL) -> tuple:
    return tuple(check_property(I, p, grid, tol=tol) for p in ("I1", "I2", "I3"))


def check_property(I, prop: str, grid: Grid | None = None, context: PropertyContext | None = None,
                   tol: Tolerance = DEFAULT_TOL, unary_samples: int = VALIDATION_SAMPLES) -> PropertyReport:
    if prop not in PROPERTIES:
        raise InvalidArgument(f"unknown property {prop!r}; known: {', '.join(PROPERTIES)}")
    grid = grid or make_grid(DEFAULT_RESOLUTION)
    exact = bool(getattr(I, "exact", False))
    ctx_desc = context.describe() if context else {}

    if prop in UNARY_PROPERTIES:
        t = make_grid(unary_samples).points
        if prop == "NP":
            v = as_array(I(np.ones_like(t), t))
            cols = {"x": np.ones_like(t), "y": t, "value": v, "expected": t}
            bad = np.abs(v - t) > tol.eps_eq
        elif prop == "IP":
            v = as_array(I(t, t))
            cols = {"x": t, "y": t, "value": v, "expected": np.ones_like(t)}
            bad = np.abs(v - 1.0) > tol.eps_eq
        else:
            N = _need_n(prop, context)
            v, n = as_array(I(t, np.zeros_like(t))), as_array(N(t))
            cols = {"x": t, "y": np.zeros_like(t), "value": v, "expected": n}
            bad = np.abs(v - n) > tol.eps_eq
        return _report(prop, bad, cols, unary_samples, tol, I, ctx_desc)

    X, Y = grid.mesh()
    if prop == "I1":
        v = as_array(I(X, Y))
        # rows walk x, so compare consecutive rows
        bad = np.zeros_like(v, dtype=bool)
        bad[1:] = v[1:] > v[:-1] + tol.eps_mono
        prev = np.vstack([v[:1], v[:-1]])
        cols = {"x": X, "y": Y, "value": v, "previous": prev}
    elif prop == "I2":
        v = as_array(I(X, Y))
        bad = np.zeros_like(v, dtype=bool)
        bad[:, 1:] = v[:, 1:] < v[:, :-1] - tol.eps_mono
        prev = np.hstack([v[:, :1], v[:, :-1]])
        cols = {"x": X, "y": Y, "value": v, "previous": prev}
    elif prop == "I3":
        xs = np.array([0.0, 1.0, 1.0])
        ys = np.array([0.0, 1.0, 0.0])
        want = np.array([1.0, 1.0, 0.0])
        v = as_array(I(xs, ys))
        bad = np.abs(v - want) > tol.eps_eq
        cols = {"x": xs, "y": ys, "value": v, "expected": want}
    elif prop == "OP":
        v = as_array(I(X, Y))
        one = _is_one(v, exact, tol)
        bad = (X <= Y) != one
        cols = {"x": X, "y": Y, "value": v}
    elif prop == "CB":
        v = as_array(I(X, Y))
        bad = v < Y - tol.eps_eq
        cols = {"x": X, "y": Y, "value": v, "expected": Y}
    elif prop == "LF":
        v = as_array(I(X, Y))
        bad = ((X == 1.0) & (Y == 0.0)) != _is_zero(v, exact, tol)
        cols = {"x": X, "y": Y, "value": v}
    elif prop == "LT":
        v = as_array(I(X, Y))
        bad = ((X == 0.0) | (Y == 1.0)) != _is_one(v, exact, tol)
        cols = {"x": X, "y": Y, "value": v}
    elif prop in ("CP", "LCP", "RCP"):
        N = _need_n(prop, context)
        NX, NY = as_array(N(X)), as_array(N(Y))
        if prop == "CP":
            a, b = as_array(I(X, Y)), as_array(I(NY, NX))
        elif prop == "LCP":
            a, b = as_array(I(NX, Y)), as_array(I(NY, X))
        else:
            a, b = as_array(I(X, NY)), as_array(I(Y, NX))
        bad = np.abs(a - b) > tol.eps_eq
        cols = {"x": X, "y": Y, "value": a, "expected": b}
    else:
        T = _need_t(context)
        v = as_array(I(X, Y))
        bads, colss = [], []
        for r in context.r_values:
            XR, YR = as_array(tnorm_power(T, X, r)), as_array(tnorm_power(T, Y, r))
            live = (XR != 0.0) & (YR != 0.0)
            vr = np.where(live, as_array(I(XR, YR)), v)
            bads.append(live & (np.abs(v - vr) > tol.eps_eq))
            colss.append({"x": X, "y": Y, "r": np.full_like(X, r), "value": v, "expected": vr})
        bad = np.concatenate([b.ravel() for b in bads])
        cols = {k: np.concatenate([c[k].ravel() for c in colss]) for k in colss[0]}
    return _report(prop, bad, cols, grid.resolution, tol, I, ctx_desc)


# -- sufficient conditions ---------------------------------------------------

ESTABLISHED = "established"
FAILED = "failed"
UNKNOWN = "unknown"

PROPOSITIONS = {
    "NP": "consequent_boundary",
    "CB": "consequent_boundary",
    "NATNEG": "natural_negation",
    "IP": "identity_principle",
    "OP": "ordering_property",
    "CP": "contrapositions",
    "LCP": "contrapositions",
    "RCP": "contrapositions",
    "LT": "lowest_truth",
    "LF": "lowest_falsity",
    "PIT": "power_invariance",
}


@dataclass(frozen=True)
class Hypothesis:
    condition: str
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"condition": self.condition, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class SufficiencyReport:
    proposition: str
    property: str
    hypotheses: tuple
    conclusion_checked: PropertyReport

    @property
    def established(self) -> bool:
        return all(h.status == ESTABLISHED for h in self.hypotheses)

    @property
    def consistent(self) -> bool:
        """False only for a genuine counterexample: hypotheses hold, conclusion fails."""
        return not self.established or self.conclusion_checked.holds

    def to_dict(self) -> dict:
        return {
            "proposition": self.proposition,
            "property": self.property,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "all_established": self.established,
            "conclusion": self.conclusion_checked.to_dict(),
        }


def _status(ok: Optional[bool]) -> str:
    return UNKNOWN if ok is None else (ESTABLISHED if ok else FAILED)


def _inner_property(con, prop, context, tol, grid) -> list:
    out = []
    for i, I in enumerate(con.impls, 1):
        rep = check_property(I, prop, grid, context, tol)
        extra = "" if rep.holds else f"{rep.violation_count} violations"
        out.append(Hypothesis(f"I_{i} ({I.name}) satisfies {prop}", _status(rep.holds), extra))
    return out


def _samples():
    return make_grid(VALIDATION_SAMPLES).points


def _chain_dominated(con) -> Hypothesis:
    t = _samples()
    gap = as_array(con.c1(t)) - as_array(con.c2(t))
    k = np.unravel_index(int(np.argmax(gap)), gap.shape)
    ok = bool(gap[k] <= 0.0)
    detail = "" if ok else f"c1_{k[0] + 1}({t[k[1]]:.17g}) exceeds c2_{k[0] + 1} by {gap[k]:.3g}"
    return Hypothesis("c1_j(t) <= c2_j(t) for all j, t", _status(ok), detail)


def _multiplier_flag(con, which) -> Hypothesis:
    flag = con.F.has_unit_multipliers if which == "unit" else con.F.has_zero_multipliers
    ok = None if flag is None else not flag
    return Hypothesis(f"F ({con.F.name}) has no {which} multipliers", _status(ok),
                      "analytic flag not set" if flag is None else "")


def _open_range(con) -> Hypothesis:
    t = make_grid(VALIDATION_SAMPLES).interior()
    for label, c in (("c1", con.c1), ("c2", con.c2)):
        v = as_array(c(t))
        bad = (v <= 0.0) | (v >= 1.0)
        if bad.any():
            j, k = (int(a[0]) for a in np.nonzero(bad))
            return Hypothesis("c_ij(t) in (0,1) for t in (0,1)", FAILED,
                              f"{label}_{j + 1}({t[k]:.17g}) = {v[j, k]:.17g}")
    return Hypothesis("c_ij(t) in (0,1) for t in (0,1)", ESTABLISHED)


def _check_np_cb(con, prop, context, tol, grid):
    v = is_f_chain(con.c2, con.F, tol=tol)
    hyps = [Hypothesis("c2 is an F-chain", _status(v.holds),
                       "" if v.holds else f"|F(c2(t)) - t| = {v.deviation:.3g} at t={v.witness}")]
    return hyps + _inner_property(con, prop, context, tol, grid)


def _check_natneg(con, prop, context, tol, grid):
    N = _need_n(prop, context)
    hyps = [Hypothesis(f"N ({N.name}) is strong", _status(N.is_strong))]
    hyps += _inner_property(con, "NATNEG", context, tol, grid)
    v = is_f_chain(con.c1, con.F, tol=tol)
    hyps.append(Hypothesis("c1 is an F-chain", _status(v.holds),
                           "" if v.holds else f"|F(c1(t)) - t| = {v.deviation:.3g} at t={v.witness}"))
    d = is_self_n_dual(con.F, N, tol=tol)
    hyps.append(Hypothesis(f"F is self {N.name}-dual", _status(d.holds),
                           "" if d.holds else f"deviation {d.deviation:.3g} at {d.witness}"))
    return hyps


def _check_ip(con, prop, context, tol, grid):
    return [_chain_dominated(con)] + _inner_property(con, "IP", context, tol, grid)


def _check_op(con, prop, context, tol, grid):
    return [_chain_dominated(con), _multiplier_flag(con, "unit")] + _inner_property(con, "OP", context, tol, grid)


def _check_contrapositions(con, prop, context, tol, grid):
    N = _need_n(prop, context)
    t = _samples()
    same = con.c1 is con.c2 or bool(np.array_equal(as_array(con.c1(t)), as_array(con.c2(t))))
    hyps = [Hypothesis("c1 = c2", _status(same))]
    c = con.c1
    dev = np.abs(as_array(c(as_array(N(t)))) - np.stack([as_array(N(row)) for row in as_array(c(t))]))
    k = np.unravel_index(int(np.argmax(dev)), dev.shape)
    ok = bool(dev[k] <= tol.eps_eq)
    hyps.append(Hypothesis(f"c_j commutes with {N.name}", _status(ok),
                           "" if ok else f"component {k[0] + 1} off by {dev[k]:.3g} at t={t[k[1]]:.17g}"))
    return hyps + _inner_property(con, prop, context, tol, grid)


def _check_lt(con, prop, context, tol, grid):
    return [_open_range(con), _multiplier_flag(con, "unit")] + _inner_property(con, "LT", context, tol, grid)


def _check_lf(con, prop, context, tol, grid):
    return [_open_range(con), _multiplier_flag(con, "zero")] + _inner_property(con, "LF", context, tol, grid)


def power_commutes(f, T, r_values, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """max |f(x_T^(r)) - f(x)_T^(r)| over interior samples with x_T^(r) != 0."""
    x = make_grid(VALIDATION_SAMPLES).interior()
    worst, where = 0.0, None
    for r in r_values:
        xr = as_array(tnorm_power(T, x, r))
        live = xr != 0.0
        lhs = as_array(f(xr[live]))
        rhs = as_array(tnorm_power(T, as_array(f(x[live])), r))
        dev = np.abs(lhs - rhs)
        if dev.size and dev.max() > worst:
            k = int(np.argmax(dev))
            worst, where = float(dev[k]), (float(x[live][k]), float(r))
    return worst, where


def _check_pit(con, prop, context, tol, grid):
    T = _need_t(context)
    hyps = []
    for label, c in (("c1", con.c1), ("c2", con.c2)):
        for j, f in enumerate(c, 1):
            worst, where = power_commutes(f, T, context.r_values, tol)
            ok = worst <= tol.eps_eq
            hyps.append(Hypothesis(f"{label}_{j} ({f.name}) commutes with {T.name} powers", _status(ok),
                                   "" if ok else f"off by {worst:.3g} at (x, r) = {where}"))
    return hyps + _inner_property(con, "PIT", context, tol, grid)


_CHECKERS = {
    "consequent_boundary": _check_np_cb,
    "natural_negation": _check_natneg,
    "identity_principle": _check_ip,
    "ordering_property": _check_op,
    "contrapositions": _check_contrapositions,
    "lowest_truth": _check_lt,
    "lowest_falsity": _check_lf,
    "power_invariance": _check_pit,
}


def check_sufficiency(prop: str, con, context: PropertyContext | None = None,
                      grid: Grid | None = None, tol: Tolerance = DEFAULT_TOL) -> SufficiencyReport:
    if prop not in PROPOSITIONS:
        raise InvalidArgument(f"no sufficiency checker for {prop!r}; known: {', '.join(PROPOSITIONS)}")
    name = PROPOSITIONS[prop]
    hyps = _CHECKERS[name](con, prop, context, tol, grid)
    conclusion = check_property(con, prop, grid, context, tol)
    return SufficiencyReport(name, prop, tuple(hyps), conclusion)


def check_many(I, props: Sequence[str], grid: Grid | None = None, context: PropertyContext | None = None,
               tol: Tolerance = DEFAULT_TOL) -> list:
    return [check_property(I, p, grid, context, tol) for p in props]
