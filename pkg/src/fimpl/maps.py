"""Evaluable unary maps on [0, 1].

Every evaluator in the package is vectorised: it accepts floats or numpy
arrays and broadcasts.  Scalars in give a Python float back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .numerics import as_array, scalar_or_array


@dataclass(frozen=True, eq=False)
class UnaryMap:
    fn: Callable[[np.ndarray], np.ndarray]
    name: str
    # declared shape, informational only: "increasing", "decreasing" or ""
    monotone: str = ""
    meta: dict = field(default_factory=dict, repr=False)

    def __call__(self, t):
        a = as_array(t)
        out = np.asarray(self.fn(a), dtype=np.float64)
        if out.shape != a.shape:
            out = np.broadcast_to(out, a.shape).copy()
        return scalar_or_array(out, t)

    def __repr__(self):
        return f"UnaryMap({self.name})"


def identity() -> UnaryMap:
    return UnaryMap(lambda t: t.copy(), "t", "increasing")


def constant(value: float, name: str | None = None) -> UnaryMap:
    return UnaryMap(lambda t: np.full_like(t, value), name or repr(value))


def compose(outer: UnaryMap, inner: UnaryMap, name: str | None = None) -> UnaryMap:
    return UnaryMap(lambda t: as_array(outer(inner(t))),
                    name or f"{outer.name}∘{inner.name}")
