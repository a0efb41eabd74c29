"""Turn a parsed document into live objects from the library modules."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import aggregations as agg
from ..chains import chain_from_components, threshold_chain
from ..construction import build, build_classic
from ..errors import InvalidArgument
from ..implications import (catalog, n_reciprocation, sn_implication, zero_both, zero_lower,
                            zero_upper)
from ..maps import UnaryMap
from ..methods import (aggregation_method, contrapositivisation, horizontal_threshold,
                       ordinal_sum_example, vertical_threshold)
from ..negations import make_negation, max_tconorm, negation_by_name, probabilistic_sum, tnorm, yager_tconorm
from .parser import HEAD_KIND
from .printer import format_expr
from .syntax import (Bin, Call, Diagnostic, Document, DslError, Form, Neg, Num, Pi, Piecewise,
                     Var, Word)

_BINOPS = {"+": np.add, "-": np.subtract, "*": np.multiply, "/": np.divide}


def compile_expr(e):
    """A numpy function of t for the expression tree ``e``."""
    if isinstance(e, Var):
        return lambda t: t
    if isinstance(e, Pi):
        return lambda t: np.full_like(t, np.pi)
    if isinstance(e, Num):
        v = e.value
        return lambda t: np.full_like(t, v)
    if isinstance(e, Neg):
        f = compile_expr(e.operand)
        return lambda t: -f(t)
    if isinstance(e, Bin):
        f, g, op = compile_expr(e.left), compile_expr(e.right), _BINOPS[e.op]
        return lambda t: op(f(t), g(t))
    if isinstance(e, Call):
        if e.fn == "pow":
            f, k = compile_expr(e.args[0]), e.args[1].value
            if k == 2.0:
                return lambda t: f(t) * f(t)
            if k == 0.5:
                return lambda t: np.sqrt(f(t))
            return lambda t: np.power(f(t), k)
        fs = [compile_expr(a) for a in e.args]
        if e.fn == "sqrt":
            return lambda t: np.sqrt(fs[0](t))
        if e.fn == "sin":
            return lambda t: np.sin(fs[0](t))
        red = np.minimum if e.fn == "min" else np.maximum
        return lambda t: red.reduce([f(t) for f in fs])
    if isinstance(e, Piecewise):
        arms = [(a.lo.value, a.hi.value, a.lo_closed, a.hi_closed, compile_expr(a.body)) for a in e.arms]

        def fn(t):
            out = np.zeros_like(t)
            for lo, hi, lc, hc, body in arms:
                m = ((t >= lo) if lc else (t > lo)) & ((t <= hi) if hc else (t < hi))
                if m.any():
                    out[m] = body(t[m])
            return out

        return fn
    raise TypeError(f"not an expression: {e!r}")


def unary_map(e, monotone="increasing") -> UnaryMap:
    f = compile_expr(e)

    def fn(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.asarray(f(np.asarray(t, dtype=np.float64)), dtype=np.float64)

    return UnaryMap(fn, format_expr(e), monotone)


@dataclass
class Bindings:
    """Elaborated objects in declaration order."""
    objects: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.objects[name]

    def __contains__(self, name):
        return name in self.objects

    def names(self):
        return list(self.objects)


def _nums(a):
    return [n.value for n in a.items]


def _conorm(arg):
    if isinstance(arg, Form):
        return yager_tconorm(arg.args[0].value)
    if arg.text == "max":
        return max_tconorm()
    if arg.text == "probsum":
        return probabilistic_sum()
    raise InvalidArgument("yager needs a parameter, e.g. yager(2)")


def _build(name, form: Form, env: dict):
    h, a = form.head, form.args

    def ref(i):
        return env[a[i].name]

    def refs(i):
        return [env[r.name] for r in a[i].items]

    if h == "negation":
        if isinstance(a[0], Word):
            return negation_by_name(a[0].text)
        m = unary_map(a[0].expr, "decreasing")
        return make_negation(m.fn, m.name)
    if h == "tnorm":
        return tnorm(a[0].text)
    if h == "implication":
        return catalog(a[0].text)
    if h == "sn":
        return sn_implication(_conorm(a[0]), ref(1))
    if h == "recip":
        return n_reciprocation(ref(0), ref(1))
    if h in ("zlow", "zup", "zboth"):
        return {"zlow": zero_lower, "zup": zero_upper, "zboth": zero_both}[h](ref(0))
    if h == "agg":
        return agg.builtin(a[0].text, int(a[1].value))
    if h == "wmean":
        return agg.weighted_mean(_nums(a[0]))
    if h == "chain":
        return chain_from_components([unary_map(u.expr) for u in a])
    if h == "thresholdchain":
        return threshold_chain(_nums(a[0]))
    if h == "construct":
        return build(ref(0), ref(1), ref(2), refs(3), name)
    if h == "classic":
        return build_classic(ref(0), ref(1), ref(2), name=name)
    if h == "aggmethod":
        kind = a[0]
        if isinstance(kind, Word):
            return aggregation_method(kind.text, refs(1))
        if kind.head == "convex":
            return aggregation_method("convex", refs(1), weights=_nums(kind.args[0]))
        return aggregation_method("general", refs(1), F=env[kind.args[0].name])
    if h == "contrap":
        return contrapositivisation(a[0].text, ref(1), ref(2))
    if h == "hthreshold":
        return horizontal_threshold(_nums(a[0]), refs(1))
    if h == "vthreshold":
        return vertical_threshold(_nums(a[0]), _nums(a[1]), refs(2))
    if h == "osum":
        return ordinal_sum_example(_nums(a[0]), refs(1))
    raise InvalidArgument(f"unknown form {h!r}")


def _deps(form):
    out = []
    for x in form.args:
        if hasattr(x, "items") and x.items and hasattr(x.items[0], "name"):
            out += [r.name for r in x.items]
        elif hasattr(x, "name") and not isinstance(x, Word):
            out.append(x.name)
        elif isinstance(x, Form):
            out += _deps(x)
    return out


def elaborate(doc: Document) -> Bindings:
    """Build every declaration; raises DslError listing each failing one.

    A declaration that depends on a failed one is skipped silently, so a
    single mistake produces a single diagnostic.
    """
    out, diags, failed = Bindings(), [], set()
    for d in doc.decls:
        if any(dep in failed for dep in _deps(d.form)):
            failed.add(d.name)
            continue
        try:
            with np.errstate(all="ignore"):
                obj = _build(d.name, d.form, out.objects)
        except (InvalidArgument, ValueError, ZeroDivisionError, OverflowError) as exc:
            diags.append(Diagnostic(d.form.span, f"{d.name}: {exc}"))
            failed.add(d.name)
            continue
        out.objects[d.name] = obj
        out.kinds[d.name] = HEAD_KIND[d.form.head]
    if diags:
        raise DslError(diags)
    return out
