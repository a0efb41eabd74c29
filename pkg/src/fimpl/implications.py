"""Base fuzzy implication functions and implication-to-implication transforms.

Catalog codes:

    LK  Łukasiewicz        min(1, 1 - x + y)
    KD  Kleene-Dienes      max(1 - x, y)
    RC  Reichenbach        1 - x + xy
    GD  Gödel              1 if x <= y else y
    GG  Goguen             1 if x <= y else y / x
    RS  Rescher            1 if x <= y else 0
    LG  log-ratio          1 if x <= y else ln x / ln y   (0 when y = 0)
    GREATEST               0 only at (1, 0)
    LEAST                  1 only where x = 0 or y = 1

RS and LG are invariant under product t-norm powers; GREATEST and LEAST are
the extremal implications.  ``sn_implication`` builds I(x, y) = S(N(x), y).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidArgument
from .negations import Negation, TConorm, classical_negation, yager_tconorm
from .numerics import as_array, scalar_or_array

BinaryFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class Implication:
    fn: BinaryFn
    name: str
    # properties known analytically; "CP(Nc)" etc. carry their context
    flags: frozenset = frozenset()
    # value 1 / value 0 regions come from literal branch constants
    exact: bool = False

    def __call__(self, x, y):
        a, b = np.broadcast_arrays(as_array(x), as_array(y))
        out = np.asarray(self.fn(a, b), dtype=np.float64)
        return scalar_or_array(out, x, y)

    def __repr__(self):
        return f"Implication({self.name})"


def _lk(x, y):
    return np.minimum(1.0, 1.0 - x + y)


def _kd(x, y):
    return np.maximum(1.0 - x, y)


def _rc(x, y):
    # 1 - x + xy, grouped so the result is exactly monotone and hits 1 at y=1
    return 1.0 - x * (1.0 - y)


def _gd(x, y):
    return np.where(x <= y, 1.0, y)


def _gg(x, y):
    out = np.ones_like(x)
    np.divide(y, x, out=out, where=x > y)
    return out


def _rs(x, y):
    return np.where(x <= y, 1.0, 0.0)


def _lg(x, y):
    out = np.ones_like(x)
    below = x > y
    out[below] = 0.0
    live = below & (y > 0.0)
    out[live] = np.log(x[live]) / np.log(y[live])
    return out


def _greatest(x, y):
    return np.where((x == 1.0) & (y == 0.0), 0.0, 1.0)


def _least(x, y):
    return np.where((x == 0.0) | (y == 1.0), 1.0, 0.0)


_CATALOG = {
    "LK": (_lk, {"NP", "CB", "IP", "OP", "LF", "CP(Nc)", "LCP(Nc)", "RCP(Nc)"}, False),
    "KD": (_kd, {"NP", "CB", "LF", "LT", "CP(Nc)", "LCP(Nc)", "RCP(Nc)"}, False),
    "RC": (_rc, {"NP", "CB", "LF", "LT", "CP(Nc)", "LCP(Nc)", "RCP(Nc)"}, False),
    "GD": (_gd, {"NP", "CB", "IP", "OP"}, True),
    "GG": (_gg, {"NP", "CB", "IP", "OP"}, True),
    "RS": (_rs, {"IP", "OP", "CP(Nc)", "PIT(product)"}, True),
    "LG": (_lg, {"IP", "OP", "PIT(product)"}, True),
    "GREATEST": (_greatest, {"CB", "IP", "LF", "CP(Nc)", "LCP(Nc)", "RCP(Nc)", "PIT(product)"}, True),
    "LEAST": (_least, {"LT", "CP(Nc)", "LCP(Nc)", "RCP(Nc)", "PIT(product)"}, True),
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog(name: str) -> Implication:
    try:
        fn, flags, exact = _CATALOG[name]
    except KeyError:
        raise InvalidArgument(f"unknown implication {name!r}; known: {', '.join(_CATALOG)}") from None
    return Implication(fn, name, frozenset(flags), exact)


def sn_implication(S: TConorm, N: Negation) -> Implication:
    def fn(x, y):
        return S(N(x), y)

    flags = {"NP", "CB"}
    if N.name == "Nc":
        flags |= {"CP(Nc)", "LCP(Nc)", "RCP(Nc)"}
    return Implication(fn, f"SN({S.name},{N.name})", frozenset(flags))


def yager_sn(lam: float, N: Negation | None = None) -> Implication:
    return sn_implication(yager_tconorm(lam), N or classical_negation())


# -- transforms ------------------------------------------------------------

def n_reciprocation(I, N: Negation) -> Implication:
    """I_N(x, y) = I(N(y), N(x))."""

    def fn(x, y):
        return as_array(I(N(y), N(x)))

    return Implication(fn, f"recip({I.name},{N.name})", exact=getattr(I, "exact", False))


def zero_lower(I) -> Implication:
    """0 where x > 0 and y = 0, I elsewhere."""

    def fn(x, y):
        return np.where((x > 0.0) & (y == 0.0), 0.0, as_array(I(x, y)))

    return Implication(fn, f"zlow({I.name})", exact=getattr(I, "exact", False))


def zero_upper(I) -> Implication:
    """0 where x = 1 and y < 1, I elsewhere."""

    def fn(x, y):
        return np.where((x == 1.0) & (y < 1.0), 0.0, as_array(I(x, y)))

    return Implication(fn, f"zup({I.name})", exact=getattr(I, "exact", False))


def zero_both(I) -> Implication:
    def fn(x, y):
        hit = ((x == 1.0) & (y < 1.0)) | ((x > 0.0) & (y == 0.0))
        return np.where(hit, 0.0, as_array(I(x, y)))

    return Implication(fn, f"zboth({I.name})", exact=getattr(I, "exact", False))


def max_with_negated_antecedent(I, N: Negation) -> Implication:
    """max(I(x, y), N(x)), first factor of the medium contrapositivisation."""

    def fn(x, y):
        return np.maximum(as_array(I(x, y)), as_array(N(x)))

    return Implication(fn, f"maxN({I.name},{N.name})")


def max_reciprocal_with_consequent(I, N: Negation) -> Implication:
    """max(I(N(y), N(x)), y), second factor of the medium contrapositivisation."""

    def fn(x, y):
        return np.maximum(as_array(I(N(y), N(x))), y)

    return Implication(fn, f"maxY({I.name},{N.name})")


def as_implication(obj, name: str | None = None) -> Implication:
    """View anything callable on (x, y) as an Implication."""
    if isinstance(obj, Implication):
        return obj
    return Implication(lambda x, y: as_array(obj(x, y)), name or getattr(obj, "name", "anonymous"),
                       exact=getattr(obj, "exact", False))
