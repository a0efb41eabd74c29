"""Increasing maps c: [0,1] -> [0,1]^n, F-chain checks and chain families."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .aggregations import Aggregator
from .errors import InvalidArgument, InvalidChain
from .maps import UnaryMap, identity
from .numerics import DEFAULT_TOL, Grid, Tolerance, as_array, make_grid

VALIDATION_SAMPLES = 1001


@dataclass(frozen=True, eq=False)
class ChainMap:
    components: tuple

    @property
    def n(self) -> int:
        return len(self.components)

    def __getitem__(self, i) -> UnaryMap:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return self.n

    def __call__(self, t):
        """Stacked component values, shape (n,) + shape(t)."""
        return np.stack([as_array(c(t)) for c in self.components])

    def __repr__(self):
        return "ChainMap(" + ", ".join(c.name for c in self.components) + ")"


def validate_component(f: UnaryMap, index: int = 0, samples: int = VALIDATION_SAMPLES):
    t = make_grid(samples).points
    v = as_array(f(t))
    if not np.all(np.isfinite(v)):
        k = int(np.nonzero(~np.isfinite(v))[0][0])
        raise InvalidChain(f"component {index} ({f.name}) is not finite at t={t[k]}", index, float(t[k]))
    if v[0] != 0.0 or v[-1] != 1.0:
        raise InvalidChain(f"component {index} ({f.name}) must map 0->0 and 1->1, "
                           f"got {float(v[0])!r} and {float(v[-1])!r}", index, 0.0 if v[0] != 0.0 else 1.0)
    outside = np.nonzero((v < 0.0) | (v > 1.0))[0]
    if outside.size:
        k = int(outside[0])
        raise InvalidChain(f"component {index} ({f.name}) leaves [0, 1] at t={t[k]}", index, float(t[k]))
    drops = np.nonzero(np.diff(v) < 0.0)[0]
    if drops.size:
        k = int(drops[0])
        raise InvalidChain(f"component {index} ({f.name}) decreases between t={t[k]} and t={t[k + 1]}",
                           index, (float(t[k]), float(t[k + 1])))


def chain_from_components(fs: Sequence[UnaryMap]) -> ChainMap:
    fs = tuple(fs)
    if not fs:
        raise InvalidArgument("a chain needs at least one component")
    for i, f in enumerate(fs):
        validate_component(f, i)
    return ChainMap(fs)


def identity_chain(n: int) -> ChainMap:
    return ChainMap(tuple(identity() for _ in range(n)))


@dataclass(frozen=True)
class FChainVerdict:
    holds: bool
    deviation: float
    witness: Optional[float]

    def __bool__(self):
        return self.holds


def is_f_chain(c: ChainMap, F: Aggregator, grid: Grid | None = None,
               tol: Tolerance = DEFAULT_TOL) -> FChainVerdict:
    if c.n != F.arity:
        raise InvalidArgument(f"chain has {c.n} components but {F.name} has arity {F.arity}")
    t = (grid or make_grid(VALIDATION_SAMPLES)).points
    dev = np.abs(as_array(F(*c(t))) - t)
    k = int(np.argmax(dev))
    worst = float(dev[k])
    return FChainVerdict(worst <= tol.eps_eq, worst, float(t[k]) if worst > tol.eps_eq else None)


def check_breakpoints(e: Sequence[float], what: str = "breakpoints") -> tuple:
    e = tuple(float(v) for v in e)
    if len(e) < 2:
        raise InvalidArgument(f"{what} need at least two entries")
    if e[0] != 0.0 or e[-1] != 1.0:
        raise InvalidArgument(f"{what} must start at 0 and end at 1, got {e}")
    if any(b <= a for a, b in zip(e, e[1:])):
        raise InvalidArgument(f"{what} must be strictly increasing, got {e}")
    return e


def threshold_component(lo: float, hi: float, name: str | None = None) -> UnaryMap:
    """0 on [0, lo], (t - lo)/(hi - lo) on (lo, hi], 1 above."""
    width = hi - lo

    def fn(t):
        return np.where(t <= lo, 0.0, np.where(t <= hi, (t - lo) / width, 1.0))

    return UnaryMap(fn, name or f"thr({lo:g},{hi:g})", "increasing", {"threshold": (lo, hi)})


def threshold_chain(e: Sequence[float]) -> ChainMap:
    e = check_breakpoints(e)
    return chain_from_components(threshold_component(a, b) for a, b in zip(e, e[1:]))


# -- named families ----------------------------------------------------------

def power(k: float) -> UnaryMap:
    if not (isinstance(k, (int, float)) and k > 0 and math.isfinite(k)):
        raise InvalidArgument(f"power exponent must be positive, got {k!r}")
    k = float(k)
    if k == 1.0:
        return identity()
    if k == 2.0:
        return UnaryMap(lambda t: t * t, "t^2", "increasing", {"power": 2.0})
    if k == 0.5:
        return UnaryMap(np.sqrt, "sqrt(t)", "increasing", {"power": 0.5})
    return UnaryMap(lambda t: np.power(t, k), f"t^{k:g}", "increasing", {"power": k})


def sin2() -> UnaryMap:
    return UnaryMap(lambda t: np.sin(np.pi * t / 2.0) ** 2, "sin2", "increasing")


def smoothstep() -> UnaryMap:
    """3t^2 - 2t^3; like sin2 it satisfies c(1 - t) = 1 - c(t)."""
    return UnaryMap(lambda t: t * t * (3.0 - 2.0 * t), "smoothstep", "increasing")


def blend(a: float) -> UnaryMap:
    """t + a t (1 - t), increasing for |a| <= 1."""
    if not -1.0 <= a <= 1.0:
        raise InvalidArgument(f"blend coefficient must lie in [-1, 1], got {a!r}")
    a = float(a)
    return UnaryMap(lambda t: t + a * t * (1.0 - t), f"blend({a:g})", "increasing", {"blend": a})


def example_1ii() -> UnaryMap:
    """t on [0, 0.5], 2t - 0.5 on (0.5, 0.75], 1 on (0.75, 1]."""

    def fn(t):
        return np.where(t <= 0.5, t, np.where(t <= 0.75, 2.0 * t - 0.5, 1.0))

    return UnaryMap(fn, "example_1ii", "increasing")


def named_chain(kind: str, *params) -> UnaryMap:
    if kind == "identity":
        return identity()
    if kind == "power":
        if len(params) != 1:
            raise InvalidArgument("power takes one exponent")
        return power(params[0])
    if kind == "power_matrix":
        if len(params) != 2 or any(int(p) != p or p < 1 for p in params):
            raise InvalidArgument("power_matrix takes two positive integer indices")
        return power(float(params[0] + params[1]))
    if kind == "sin2":
        return sin2()
    if kind == "smoothstep":
        return smoothstep()
    if kind == "blend":
        return blend(*params)
    if kind == "example_1ii":
        return example_1ii()
    raise InvalidArgument(f"unknown chain family {kind!r}")


def chain_from_names(*specs) -> ChainMap:
    """chain_from_names(("power", 2), ("identity",)) and similar."""
    return chain_from_components(named_chain(s[0], *s[1:]) for s in specs)
