"""Fuzzy negations, the three continuous t-norms we support, their real
powers, and the t-conorms used to build (S,N)-implications."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidArgument
from .maps import UnaryMap
from .numerics import DEFAULT_TOL, Tolerance, as_array, make_grid, scalar_or_array

_STRONG_SAMPLES = 1001


@dataclass(frozen=True, eq=False)
class Negation:
    map: UnaryMap
    is_strong: bool

    @property
    def name(self) -> str:
        return self.map.name

    def __call__(self, x):
        return self.map(x)

    def __repr__(self):
        return f"Negation({self.name}, strong={self.is_strong})"


def make_negation(fn: Callable[[np.ndarray], np.ndarray], name: str,
                  tol: Tolerance = DEFAULT_TOL) -> Negation:
    """Wrap ``fn`` as a negation, validating it on 1001 samples.

    Strongness is measured, never declared: N(N(x)) must return x within
    ``tol.eps_eq`` at every sample.
    """
    m = UnaryMap(fn, name, "decreasing")
    t = make_grid(_STRONG_SAMPLES).points
    v = as_array(m(t))
    if v[0] != 1.0 or v[-1] != 0.0:
        raise InvalidArgument(f"negation {name}: need N(0)=1 and N(1)=0, got {v[0]}, {v[-1]}")
    if np.any((v < 0) | (v > 1)):
        raise InvalidArgument(f"negation {name} leaves [0, 1]")
    drops = np.nonzero(np.diff(v) > 0)[0]
    if drops.size:
        i = int(drops[0])
        raise InvalidArgument(f"negation {name} increases between t={t[i]} and t={t[i + 1]}")
    strong = bool(np.max(np.abs(as_array(m(v)) - t)) <= tol.eps_eq)
    return Negation(m, strong)


def classical_negation() -> Negation:
    return make_negation(lambda x: 1.0 - x, "Nc")


def quadratic_negation() -> Negation:
    return make_negation(lambda x: 1.0 - x * x, "Nq")


def drastic_lower_negation() -> Negation:
    """Least fuzzy negation: 1 at 0, 0 elsewhere."""
    return make_negation(lambda x: np.where(x == 0.0, 1.0, 0.0), "ND1")


def drastic_upper_negation() -> Negation:
    """Greatest fuzzy negation: 1 below 1, 0 at 1."""
    return make_negation(lambda x: np.where(x == 1.0, 0.0, 1.0), "ND2")


NEGATIONS = {
    "classical": classical_negation,
    "quadratic": quadratic_negation,
    "drastic_lower": drastic_lower_negation,
    "drastic_upper": drastic_upper_negation,
}


def negation_by_name(name: str) -> Negation:
    key = {"Nc": "classical", "Nq": "quadratic", "ND1": "drastic_lower",
           "ND2": "drastic_upper"}.get(name, name)
    try:
        return NEGATIONS[key]()
    except KeyError:
        raise InvalidArgument(f"unknown negation {name!r}; known: {sorted(NEGATIONS)}") from None


# -- t-norms ---------------------------------------------------------------

TNORM_KINDS = ("minimum", "product", "lukasiewicz")


@dataclass(frozen=True)
class ContinuousTNorm:
    kind: str

    def __post_init__(self):
        if self.kind not in TNORM_KINDS:
            raise InvalidArgument(f"unsupported t-norm {self.kind!r}; choose from {TNORM_KINDS}")

    @property
    def name(self) -> str:
        return self.kind

    def __call__(self, x, y):
        a, b = as_array(x), as_array(y)
        if self.kind == "minimum":
            out = np.minimum(a, b)
        elif self.kind == "product":
            out = a * b
        else:
            out = np.maximum(0.0, a + b - 1.0)
        return scalar_or_array(out, x, y)

    def power(self, x, r: float):
        return tnorm_power(self, x, r)


def tnorm(kind: str) -> ContinuousTNorm:
    return ContinuousTNorm(kind)


def tnorm_power(T: ContinuousTNorm, x, r: float):
    """x_T^(r) through the additive generator of T (min is idempotent)."""
    if not r > 0:
        raise InvalidArgument(f"t-norm power needs r > 0, got {r!r}")
    a = as_array(x)
    if T.kind == "minimum":
        out = a.copy()
    elif T.kind == "product":
        out = np.power(a, r)
    else:
        out = np.maximum(0.0, 1.0 - r * (1.0 - a))
    return scalar_or_array(out, x)


# -- t-conorms -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TConorm:
    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    name: str

    def __call__(self, x, y):
        return scalar_or_array(np.asarray(self.fn(as_array(x), as_array(y)), dtype=np.float64), x, y)


def yager_tconorm(lam: float) -> TConorm:
    if not lam > 0:
        raise InvalidArgument(f"Yager t-conorm needs lambda > 0, got {lam!r}")
    lam = float(lam)
    inv = 1.0 / lam

    def fn(x, y):
        return np.minimum(1.0, np.power(np.power(x, lam) + np.power(y, lam), inv))

    return TConorm(fn, f"yager({lam:g})")


def max_tconorm() -> TConorm:
    return TConorm(np.maximum, "max")


def probabilistic_sum() -> TConorm:
    # 1-(1-x)(1-y) keeps exact monotonicity and S(x,1)=1 in floating point
    return TConorm(lambda x, y: 1.0 - (1.0 - x) * (1.0 - y), "probsum")
