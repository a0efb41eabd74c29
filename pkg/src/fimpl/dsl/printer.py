"""Canonical text for documents: one declaration per line, minimal parentheses."""
from __future__ import annotations

from .syntax import (Bin, Call, Document, Form, Neg, Num, NumList, Pi, Piecewise, Ref, RefList,
                     Unary, Var, Word)

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_ATOM = 4


def _prec(e):
    if isinstance(e, Bin):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Num) and e.text.startswith("-"):
        return 3
    return _ATOM


def format_expr(e) -> str:
    if isinstance(e, Var):
        return "t"
    if isinstance(e, Pi):
        return "pi"
    if isinstance(e, Num):
        return e.text
    if isinstance(e, Neg):
        inner = format_expr(e.operand)
        return "-" + (f"({inner})" if _prec(e.operand) < 3 else inner)
    if isinstance(e, Bin):
        p = _PREC[e.op]
        left, right = format_expr(e.left), format_expr(e.right)
        if _prec(e.left) < p:
            left = f"({left})"
        # the tree is left-associative, so a right operand at the same level needs parentheses
        if _prec(e.right) <= p:
            right = f"({right})"
        return f"{left} {e.op} {right}"
    if isinstance(e, Call):
        return f"{e.fn}({', '.join(format_expr(a) for a in e.args)})"
    if isinstance(e, Piecewise):
        arms = (f"{'[' if a.lo_closed else '('}{a.lo.text}, {a.hi.text}{']' if a.hi_closed else ')'}: "
                f"{format_expr(a.body)}" for a in e.arms)
        return f"piecewise({', '.join(arms)})"
    raise TypeError(f"not an expression: {e!r}")


def _arg(a, bare_numbers=False) -> str:
    if isinstance(a, (Ref, Word)):
        return a.name if isinstance(a, Ref) else a.text
    if isinstance(a, Num):
        return a.text
    if isinstance(a, NumList):
        body = ", ".join(n.text for n in a.items)
        return body if bare_numbers else f"[{body}]"
    if isinstance(a, RefList):
        return "[" + ", ".join(r.name for r in a.items) + "]"
    if isinstance(a, Unary):
        return format_expr(a.expr)
    if isinstance(a, Form):
        return format_form(a)
    raise TypeError(f"not an argument: {a!r}")


def format_form(f: Form) -> str:
    if f.head == "chain":
        return "chain[" + ", ".join(_arg(a) for a in f.args) + "]"
    bare = f.head in ("wmean", "thresholdchain", "convex")
    return f"{f.head}(" + ", ".join(_arg(a, bare) for a in f.args) + ")"


def format_document(doc: Document) -> str:
    return "".join(f"{d.name} = {format_form(d.form)};\n" for d in doc.decls)
