"""Tokenizer and recursive-descent parser for ``.fimpl`` documents.

Syntax errors are collected per declaration: after an error the parser
skips to the next ``;`` and carries on, so one run reports every broken
declaration.  Name resolution and reference kinds are checked statically
here; value-level validation (weights, arities, chain shapes) happens in
elaboration.
"""
from __future__ import annotations

import re

from ..implications import CATALOG_NAMES
from ..negations import NEGATIONS, TNORM_KINDS
from .syntax import (Arm, Bin, Call, Decl, Diagnostic, Document, DslError, Form, Neg, Num,
                     NumList, Pi, Piecewise, Ref, RefList, Span, Unary, Var, Word)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[=;()\[\],+\-*/:])
""", re.VERBOSE)

IMPLICATION_WORDS = CATALOG_NAMES
NEGATION_WORDS = tuple(NEGATIONS)
AGG_WORDS = ("max", "min", "prod", "maxminmean")
CONTRAP_WORDS = ("upper", "lower", "medium")
CONORM_WORDS = ("max", "probsum")
UNARY_FUNCS = {"min": None, "max": None, "sqrt": 1, "sin": 1}

HEAD_KIND = {
    "negation": "negation", "tnorm": "tnorm",
    "implication": "implication", "sn": "implication", "recip": "implication",
    "zlow": "implication", "zup": "implication", "zboth": "implication",
    "agg": "aggregator", "wmean": "aggregator",
    "chain": "chain", "thresholdchain": "chain",
    "construct": "construction", "classic": "construction",
    "aggmethod": "method", "contrap": "method",
    "hthreshold": "method", "vthreshold": "method", "osum": "method",
}
IMPLICATION_LIKE = ("implication", "construction", "method")

# Reference slots of each head, by argument position, with the kinds allowed there.
_REF_KINDS = {
    "sn": {1: ("negation",)},
    "recip": {0: IMPLICATION_LIKE, 1: ("negation",)},
    "zlow": {0: IMPLICATION_LIKE}, "zup": {0: IMPLICATION_LIKE}, "zboth": {0: IMPLICATION_LIKE},
    "construct": {0: ("aggregator",), 1: ("chain",), 2: ("chain",), 3: IMPLICATION_LIKE},
    "classic": {0: ("aggregator",), 1: ("chain",), 2: IMPLICATION_LIKE},
    "aggmethod": {1: IMPLICATION_LIKE},
    "contrap": {1: IMPLICATION_LIKE, 2: ("negation",)},
    "hthreshold": {1: IMPLICATION_LIKE}, "vthreshold": {2: IMPLICATION_LIKE},
    "osum": {1: IMPLICATION_LIKE},
}


class _Tok:
    __slots__ = ("kind", "text", "span")

    def __init__(self, kind, text, span):
        self.kind, self.text, self.span = kind, text, span

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.span}"


class _Abort(Exception):
    pass


def tokenize(source: str):
    toks, diags = [], []
    line, start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            diags.append(Diagnostic(Span(line, pos - start + 1), f"unexpected character {source[pos]!r}"))
            pos += 1
            continue
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), Span(line, pos - start + 1)))
        pos = m.end()
    toks.append(_Tok("eof", "", Span(line, pos - start + 1)))
    return toks, diags


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0
        self.diags = []

    # -- token helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text):
        return self.tok.kind in ("punct", "name") and self.tok.text == text

    def advance(self):
        t = self.tok
        if t.kind != "eof":
            self.i += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.tok
        self.diags.append(Diagnostic(tok.span, message))
        raise _Abort

    def expect(self, text):
        if not self.at(text):
            found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            self.fail(f"expected {text!r}, found {found}")
        return self.advance()

    def name(self, what="a name"):
        if self.tok.kind != "name":
            self.fail(f"expected {what}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    # -- document
    def document(self):
        decls = []
        while self.tok.kind != "eof":
            try:
                decls.append(self.decl())
            except _Abort:
                self.recover()
        return Document(tuple(decls))

    def recover(self):
        while self.tok.kind != "eof" and not self.at(";"):
            self.advance()
        if self.at(";"):
            self.advance()

    def decl(self):
        name = self.name("a declaration name")
        self.expect("=")
        form = self.form()
        self.expect(";")
        return Decl(name.text, form, name.span)

    def form(self):
        head = self.name("a form such as agg(...) or chain[...]")
        h = head.text
        if h == "chain":
            self.expect("[")
            args = [self.unary()]
            while self.at(","):
                self.advance()
                args.append(self.unary())
            self.expect("]")
            return Form(h, tuple(args), head.span)
        if h not in HEAD_KIND:
            self.fail(f"unknown form {h!r}; expected one of {', '.join(sorted(HEAD_KIND))}", head)
        self.expect("(")
        args = getattr(self, "_args_" + h)()
        self.expect(")")
        return Form(h, tuple(args), head.span)

    # -- argument forms
    def word(self, allowed, what):
        t = self.name(what)
        if t.text not in allowed:
            self.fail(f"unknown {what} {t.text!r}; expected one of {', '.join(allowed)}", t)
        return Word(t.text, t.span)

    def ref(self):
        t = self.name("a reference")
        return Ref(t.text, t.span)

    def comma(self):
        self.expect(",")

    def number(self):
        start = self.tok
        sign = ""
        if self.at("-"):
            self.advance()
            sign = "-"
        if self.tok.kind != "num":
            self.fail(f"expected a number, found {self.tok.text or 'end of input'!r}")
        a = self.advance().text
        value, text = float(a), sign + a
        if self.at("/"):
            self.advance()
            if self.tok.kind != "num":
                self.fail("expected a denominator")
            b = self.advance()
            if float(b.text) == 0.0:
                self.fail("division by zero in a numeric literal", b)
            value, text = value / float(b.text), f"{text}/{b.text}"
        return Num(-value if sign else value, text, start.span)

    def numbers(self, closer):
        start = self.tok.span
        items = [self.number()]
        while self.at(","):
            self.advance()
            items.append(self.number())
        if not self.at(closer):
            self.expect(closer)
        return NumList(tuple(items), start)

    def bracket_numbers(self):
        start = self.expect("[").span
        items = self.numbers("]").items
        self.expect("]")
        return NumList(items, start)

    def bracket_refs(self):
        start = self.expect("[").span
        items = [self.ref()]
        while self.at(","):
            self.advance()
            items.append(self.ref())
        self.expect("]")
        return RefList(tuple(items), start)

    def integer(self):
        n = self.number()
        if n.value != int(n.value) or n.value < 1 or "/" in n.text:
            self.diags.append(Diagnostic(n.span, f"arity must be a positive integer, got {n.text}"))
            raise _Abort
        return n

    def _args_negation(self):
        if self.tok.kind == "name" and self.tok.text in NEGATION_WORDS and self.peek().text == ")":
            t = self.advance()
            return [Word(t.text, t.span)]
        return [self.unary()]

    def _args_tnorm(self):
        return [self.word(TNORM_KINDS, "t-norm")]

    def _args_implication(self):
        return [self.word(IMPLICATION_WORDS, "implication")]

    def _args_sn(self):
        if self.at("yager"):
            t = self.advance()
            self.expect("(")
            lam = self.number()
            self.expect(")")
            first = Form("yager", (lam,), t.span)
        else:
            first = self.word(CONORM_WORDS + ("yager",), "t-conorm")
        self.comma()
        return [first, self.ref()]

    def _args_recip(self):
        a = self.ref()
        self.comma()
        return [a, self.ref()]

    def _args_zlow(self):
        return [self.ref()]

    _args_zup = _args_zboth = _args_zlow

    def _args_agg(self):
        w = self.word(AGG_WORDS, "aggregator")
        self.comma()
        return [w, self.integer()]

    def _args_wmean(self):
        return [self.numbers(")")]

    _args_thresholdchain = _args_wmean

    def _args_construct(self):
        F = self.ref()
        self.comma()
        c1 = self.ref()
        self.comma()
        c2 = self.ref()
        self.comma()
        return [F, c1, c2, self.bracket_refs()]

    def _args_classic(self):
        F = self.ref()
        self.comma()
        c = self.ref()
        self.comma()
        return [F, c, self.ref()]

    def _args_aggmethod(self):
        if self.at("convex"):
            t = self.advance()
            self.expect("(")
            ws = self.numbers(")")
            self.expect(")")
            kind = Form("convex", (ws,), t.span)
        elif self.at("general"):
            t = self.advance()
            self.expect("(")
            F = self.ref()
            self.expect(")")
            kind = Form("general", (F,), t.span)
        else:
            kind = self.word(("max", "min", "convex", "general"), "aggregation method")
        self.comma()
        return [kind, self.bracket_refs()]

    def _args_contrap(self):
        w = self.word(CONTRAP_WORDS, "contrapositivisation")
        self.comma()
        I = self.ref()
        self.comma()
        return [w, I, self.ref()]

    def _args_hthreshold(self):
        e = self.bracket_numbers()
        self.comma()
        return [e, self.bracket_refs()]

    _args_osum = _args_hthreshold

    def _args_vthreshold(self):
        e = self.bracket_numbers()
        self.comma()
        th = self.bracket_numbers()
        self.comma()
        return [e, th, self.bracket_refs()]

    # -- unary expressions
    def unary(self):
        span = self.tok.span
        return Unary(self.expr(), span)

    def expr(self):
        left = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            left = Bin(op.text, left, self.term(), op.span)
        return left

    def term(self):
        left = self.factor()
        while self.at("*") or self.at("/"):
            op = self.advance()
            left = Bin(op.text, left, self.factor(), op.span)
        return left

    def factor(self):
        if self.at("-"):
            t = self.advance()
            return Neg(self.factor(), t.span)
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(float(t.text), t.text, t.span)
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind != "name":
            self.fail(f"expected an expression in t, found {t.text or 'end of input'!r}")
        self.advance()
        if t.text == "t":
            return Var(t.span)
        if t.text == "pi":
            return Pi(t.span)
        if t.text == "piecewise":
            return self.piecewise(t)
        if t.text == "pow":
            self.expect("(")
            base = self.expr()
            self.comma()
            k = self.number()
            self.expect(")")
            return Call("pow", (base, k), t.span)
        if t.text in UNARY_FUNCS:
            self.expect("(")
            args = [self.expr()]
            while self.at(","):
                self.advance()
                args.append(self.expr())
            self.expect(")")
            want = UNARY_FUNCS[t.text]
            if want is not None and len(args) != want:
                self.fail(f"{t.text} takes {want} argument, got {len(args)}", t)
            if want is None and len(args) < 2:
                self.fail(f"{t.text} needs at least 2 arguments", t)
            return Call(t.text, tuple(args), t.span)
        self.fail(f"unknown name {t.text!r} in expression; only t, pi, min, max, sqrt, sin, pow "
                  f"and piecewise are available", t)

    def piecewise(self, head):
        self.expect("(")
        arms = [self.arm()]
        while self.at(","):
            self.advance()
            arms.append(self.arm())
        self.expect(")")
        self.check_arms(arms, head)
        return Piecewise(tuple(arms), head.span)

    def arm(self):
        open_tok = self.tok
        if not (self.at("[") or self.at("(")):
            self.fail("expected an interval such as [0, 0.5] or (0.5, 1]")
        self.advance()
        lo = self.number()
        self.comma()
        hi = self.number()
        if not (self.at("]") or self.at(")")):
            self.fail("expected ']' or ')' to close the interval")
        close = self.advance()
        self.expect(":")
        body = self.expr()
        return Arm(lo, hi, open_tok.text == "[", close.text == "]", body, open_tok.span)

    def check_arms(self, arms, head):
        first, last = arms[0], arms[-1]
        if first.lo.value != 0.0 or not first.lo_closed:
            self.fail("piecewise must start with a closed interval at 0, e.g. [0, ...", first)
        if last.hi.value != 1.0 or not last.hi_closed:
            self.fail("piecewise must end with a closed interval at 1, e.g. ..., 1]", last)
        for a in arms:
            if not a.lo.value < a.hi.value:
                self.fail(f"empty interval {a.lo.text}..{a.hi.text}", a)
        for a, b in zip(arms, arms[1:]):
            if a.hi.value != b.lo.value:
                self.fail(f"intervals must meet: {a.hi.text} is followed by {b.lo.text}", b)
            if a.hi_closed == b.lo_closed:
                what = "both include" if a.hi_closed else "both exclude"
                self.fail(f"adjacent intervals {what} the breakpoint {b.lo.text}", b)


def _article(kind: str) -> str:
    return ("an " if kind[0] in "aeiou" else "a ") + kind


def _check_names(doc: Document):
    """Duplicate bindings, unresolved or forward references, and reference kinds."""
    diags, kinds = [], {}
    for d in doc.decls:
        if d.name in kinds:
            diags.append(Diagnostic(d.span, f"duplicate binding {d.name!r}"))
        slots = _REF_KINDS.get(d.form.head, {})
        for pos, arg in enumerate(d.form.args):
            refs = _refs_in(arg)
            for ref in refs:
                if ref.name not in kinds:
                    diags.append(Diagnostic(ref.span, f"unresolved reference {ref.name!r}"))
                    continue
                allowed = slots.get(pos, ())
                if d.form.head == "aggmethod" and pos == 0:
                    allowed = ("aggregator",)
                if allowed and kinds[ref.name] not in allowed:
                    diags.append(Diagnostic(ref.span, f"{ref.name!r} is {_article(kinds[ref.name])}, "
                                                      f"expected {' or '.join(allowed)}"))
        kinds.setdefault(d.name, HEAD_KIND[d.form.head])
    return diags


def _refs_in(arg):
    if isinstance(arg, Ref):
        return [arg]
    if isinstance(arg, RefList):
        return list(arg.items)
    if isinstance(arg, Form):
        return [r for a in arg.args for r in _refs_in(a)]
    return []


def parse_syntax(source: str) -> Document:
    """Parse and resolve names; raises DslError with every diagnostic found."""
    toks, diags = tokenize(source)
    p = _Parser(toks)
    doc = p.document()
    diags += p.diags
    if not diags:
        diags += _check_names(doc)
    if diags:
        raise DslError(sorted(diags, key=lambda d: (d.span.line, d.span.col)))
    return doc
