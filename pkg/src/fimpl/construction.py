"""The generalized F-chain construction

    (I_1, ..., I_n)_{F, c1, c2}(x, y) = F(I_1(c1_1(x), c2_1(y)), ..., I_n(c1_n(x), c2_n(y)))

and the classic single-implication special case."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .aggregations import Aggregator
from .chains import ChainMap, is_f_chain
from .errors import InvalidArgument
from .maps import UnaryMap
from .numerics import DEFAULT_TOL, Tolerance, as_array, check_unit_interval, scalar_or_array


@dataclass(frozen=True, eq=False)
class Construction:
    F: Aggregator
    c1: ChainMap
    c2: ChainMap
    impls: tuple
    name: str = "construction"

    flags = frozenset()
    exact = False

    @property
    def n(self) -> int:
        return self.F.arity

    def inner(self, x, y) -> list:
        """The n inner implication values, before aggregation."""
        return [as_array(I(a(x), b(y))) for I, a, b in zip(self.impls, self.c1, self.c2)]

    def __call__(self, x, y):
        check_unit_interval(x, y, what="construction argument")
        xa, ya = np.broadcast_arrays(as_array(x), as_array(y))
        out = as_array(self.F(*self.inner(xa, ya)))
        return scalar_or_array(out, x, y)

    def __repr__(self):
        return (f"Construction({self.F.name}; {self.c1!r}; {self.c2!r}; "
                f"[{', '.join(I.name for I in self.impls)}])")


def build(F: Aggregator, c1: ChainMap, c2: ChainMap, impls: Sequence, name: str = "construction") -> Construction:
    impls = tuple(impls)
    sizes = {"F": F.arity, "c1": c1.n, "c2": c2.n, "impls": len(impls)}
    if len(set(sizes.values())) != 1:
        raise InvalidArgument("arity mismatch: " + ", ".join(f"{k}={v}" for k, v in sizes.items()))
    return Construction(F, c1, c2, impls, name)


def evaluate(con: Construction, x, y):
    return con(x, y)


def build_classic(F: Aggregator, c: ChainMap, I, tol: Tolerance = DEFAULT_TOL,
                  name: str = "construction") -> Construction:
    if c.n != F.arity:
        raise InvalidArgument(f"chain has {c.n} components but {F.name} has arity {F.arity}")
    verdict = is_f_chain(c, F, tol=tol)
    if not verdict:
        raise InvalidArgument(f"{c!r} is not an F-chain for {F.name}: "
                              f"|F(c(t)) - t| = {verdict.deviation:.3g} at t={verdict.witness}")
    return build(F, c, c, [I] * c.n, name)


def natural_negation(con: Construction) -> UnaryMap:
    return UnaryMap(lambda t: as_array(con(t, np.zeros_like(t))), f"N[{con.name}]", "decreasing")


def natural_negation_expansion(con: Construction) -> UnaryMap:
    """F(N_{I_1}(c1_1(x)), ..., N_{I_n}(c1_n(x))), assembled from the pieces."""

    def fn(t):
        parts = [as_array(I(a(t), 0.0 * t)) for I, a in zip(con.impls, con.c1)]
        return as_array(con.F(*parts))

    return UnaryMap(fn, f"Nexp[{con.name}]", "decreasing")
