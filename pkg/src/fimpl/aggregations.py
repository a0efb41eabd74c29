"""n-ary aggregation functions and the structural metadata the sufficiency
checkers consume: unit/zero multipliers, idempotence, self-N-duality."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import InvalidArgument
from .numerics import DEFAULT_TOL, Grid, Tolerance, as_array, make_grid

_RANDOM_SAMPLES = 20000


@dataclass(frozen=True, eq=False)
class Aggregator:
    # fn receives a list of n broadcast-compatible arrays
    fn: Callable[[list], np.ndarray]
    arity: int
    name: str
    # tri-state: True / False / None (unknown)
    has_unit_multipliers: Optional[bool] = None
    has_zero_multipliers: Optional[bool] = None
    idempotent_on_diagonal: bool = False
    params: tuple = field(default=())

    def __call__(self, *xs):
        if len(xs) != self.arity:
            raise InvalidArgument(f"{self.name} takes {self.arity} arguments, got {len(xs)}")
        arrs = np.broadcast_arrays(*[as_array(x) for x in xs])
        out = np.asarray(self.fn(list(arrs)), dtype=np.float64)
        if all(np.ndim(x) == 0 for x in xs):
            return float(out)
        return out

    def __repr__(self):
        return f"Aggregator({self.name}, n={self.arity})"


def _check_arity(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidArgument(f"arity must be a positive integer, got {n!r}")
    return int(n)


def maximum(n: int) -> Aggregator:
    n = _check_arity(n)
    return Aggregator(lambda xs: np.maximum.reduce(xs), n, "max",
                      has_unit_multipliers=n >= 2, has_zero_multipliers=False,
                      idempotent_on_diagonal=True)


def minimum(n: int) -> Aggregator:
    n = _check_arity(n)
    return Aggregator(lambda xs: np.minimum.reduce(xs), n, "min",
                      has_unit_multipliers=False, has_zero_multipliers=n >= 2,
                      idempotent_on_diagonal=True)


def product(n: int) -> Aggregator:
    n = _check_arity(n)
    return Aggregator(lambda xs: np.multiply.reduce(xs), n, "prod",
                      has_unit_multipliers=False, has_zero_multipliers=n >= 2,
                      idempotent_on_diagonal=n == 1)


def weighted_mean(weights: Sequence[float], tol: Tolerance = DEFAULT_TOL) -> Aggregator:
    w = tuple(float(v) for v in weights)
    if not w:
        raise InvalidArgument("weighted mean needs at least one weight")
    if any(not (0.0 <= v <= 1.0) for v in w):
        raise InvalidArgument(f"weights must lie in [0, 1], got {w}")
    total = sum(w)
    if abs(total - 1.0) > tol.eps_eq:
        raise InvalidArgument(f"weights sum to {total:.17g}, not 1")

    def fn(xs):
        # accumulate left to right so results do not depend on numpy's pairwise summation
        acc = w[0] * xs[0]
        for wi, xi in zip(w[1:], xs[1:]):
            acc = acc + wi * xi
        return acc

    degenerate = any(v == 0.0 for v in w)
    return Aggregator(fn, len(w), "wmean", has_unit_multipliers=degenerate,
                      has_zero_multipliers=degenerate, idempotent_on_diagonal=True, params=w)


def maxmin_mean(n: int = 3) -> Aggregator:
    if n != 3:
        raise InvalidArgument(f"maxmin_mean is defined for arity 3, got {n}")

    def fn(xs):
        return (np.maximum.reduce(xs) + np.minimum.reduce(xs)) / 2.0

    return Aggregator(fn, 3, "maxminmean", has_unit_multipliers=False,
                      has_zero_multipliers=False, idempotent_on_diagonal=True)


_BUILTINS = {
    "max": maximum,
    "min": minimum,
    "product": product,
    "prod": product,
    "maxmin_mean": maxmin_mean,
    "maxminmean": maxmin_mean,
}


def builtin(kind: str, arity: int | None = None, weights: Sequence[float] | None = None) -> Aggregator:
    if kind in ("weighted_mean", "wmean"):
        if weights is None:
            raise InvalidArgument("weighted_mean needs weights")
        agg = weighted_mean(weights)
        if arity is not None and arity != agg.arity:
            raise InvalidArgument(f"{len(weights)} weights given for arity {arity}")
        return agg
    try:
        factory = _BUILTINS[kind]
    except KeyError:
        raise InvalidArgument(f"unknown aggregator {kind!r}") from None
    return factory(3 if arity is None and factory is maxmin_mean else arity)


# -- structural checks -----------------------------------------------------

@dataclass(frozen=True)
class DualityVerdict:
    holds: bool
    deviation: float
    witness: Optional[tuple]

    def __bool__(self):
        return self.holds


def _coordinate_samples(n: int, grid: Grid, seed: int):
    """Coordinates of the n-fold grid product (n <= 3) or of random grid points."""
    if n <= 3:
        mesh = np.meshgrid(*([grid.points] * n), indexing="ij")
        return [m.ravel() for m in mesh]
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, grid.resolution, size=(n, _RANDOM_SAMPLES))
    return [grid.points[row] for row in idx]


def is_self_n_dual(F: Aggregator, N, grid: Grid | None = None,
                   tol: Tolerance = DEFAULT_TOL, seed: int = 0) -> DualityVerdict:
    grid = grid or make_grid(21)
    xs = _coordinate_samples(F.arity, grid, seed)
    lhs = as_array(F(*[as_array(N(x)) for x in xs]))
    rhs = as_array(N(F(*xs)))
    dev = np.abs(lhs - rhs)
    k = int(np.argmax(dev))
    worst = float(dev[k])
    witness = tuple(float(x[k]) for x in xs) if worst > tol.eps_eq else None
    return DualityVerdict(worst <= tol.eps_eq, worst, witness)


def find_multiplier(F: Aggregator, which: str, grid: Grid | None = None,
                    seed: int = 0) -> Optional[tuple]:
    """Return a grid point that is a unit (or zero) multiplier, or None.

    None is grid-relative: it is not a proof that no multiplier exists.
    """
    if which not in ("unit", "zero"):
        raise InvalidArgument(f"which must be 'unit' or 'zero', got {which!r}")
    grid = grid or make_grid(21)
    xs = _coordinate_samples(F.arity, grid, seed)
    v = as_array(F(*xs))
    target = 1.0 if which == "unit" else 0.0
    off = np.zeros_like(v, dtype=bool)
    for x in xs:
        off |= x != target
    hits = np.nonzero((v == target) & off)[0]
    if hits.size == 0:
        return None
    k = int(hits[0])
    return tuple(float(x[k]) for x in xs)


def is_unit_multiplier(F: Aggregator, point: Sequence[float]) -> bool:
    return F(*point) == 1.0 and any(p != 1.0 for p in point)


def is_zero_multiplier(F: Aggregator, point: Sequence[float]) -> bool:
    return F(*point) == 0.0 and any(p != 0.0 for p in point)


def iter_grid_points(n: int, grid: Grid):
    return itertools.product(grid.points, repeat=n)
