"""Abstract syntax for ``.fimpl`` documents.

Spans are carried for diagnostics but excluded from equality, so two
documents compare equal when they have the same structure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class Span:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


NOSPAN = Span(0, 0)


@dataclass(frozen=True)
class Diagnostic:
    span: Span
    message: str

    def __str__(self):
        return f"{self.span}: {self.message}"


class DslError(Exception):
    """One or more diagnostics; every diagnostic has a span."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


# -- unary expressions over t ------------------------------------------------

@dataclass(frozen=True)
class Var:
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Pi:
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Num:
    """A literal; ``text`` is kept so formatting reproduces ``1/3`` as written."""
    value: float
    text: str
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Call:
    fn: str  # min, max, sqrt, sin, pow
    args: tuple
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Arm:
    lo: Num
    hi: Num
    lo_closed: bool
    hi_closed: bool
    body: "Expr"
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Piecewise:
    arms: tuple
    span: Span = field(default=NOSPAN, compare=False)


Expr = Union[Var, Pi, Num, Neg, Bin, Call, Piecewise]


# -- declaration arguments ---------------------------------------------------

@dataclass(frozen=True)
class Ref:
    name: str
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Word:
    text: str
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class NumList:
    items: tuple
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class RefList:
    items: tuple
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Unary:
    expr: Expr
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Form:
    """``head(args...)``; also used for nested forms such as ``yager(2)``."""
    head: str
    args: tuple
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Decl:
    name: str
    form: Form
    span: Span = field(default=NOSPAN, compare=False)


@dataclass(frozen=True)
class Document:
    decls: tuple = ()

    def names(self):
        return [d.name for d in self.decls]

    def __getitem__(self, name):
        for d in self.decls:
            if d.name == name:
                return d
        raise KeyError(name)
