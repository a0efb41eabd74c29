"""The ``.fimpl`` definition language.

    parse(source)      -> Document, after syntax, name and value checks
    elaborate(doc)     -> Bindings of live objects
    format(doc)        -> canonical text, with parse(format(doc)) == doc
"""
from __future__ import annotations

from pathlib import Path

from .elaborate import Bindings, compile_expr, elaborate, unary_map
from .parser import parse_syntax, tokenize
from .printer import format_document, format_expr
from .syntax import Diagnostic, Document, DslError, Span


def parse(source: str) -> Document:
    """Parse ``source`` and validate it by elaborating every declaration."""
    doc = parse_syntax(source)
    elaborate(doc)
    return doc


def format(doc: Document) -> str:  # noqa: A001 - mirrors the public operation name
    return format_document(doc)


def load(source: str) -> tuple:
    """(document, bindings) in one pass."""
    doc = parse_syntax(source)
    return doc, elaborate(doc)


def load_file(path) -> tuple:
    return load(Path(path).read_text(encoding="utf-8"))


__all__ = ["parse", "parse_syntax", "elaborate", "format", "format_document", "format_expr",
           "load", "load_file", "Bindings", "Document", "Diagnostic", "DslError", "Span",
           "compile_expr", "unary_map", "tokenize"]
