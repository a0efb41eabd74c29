"""Grids, tolerances and the array helpers shared by every checker."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument


@dataclass(frozen=True)
class Tolerance:
    eps_eq: float = 1e-12
    eps_mono: float = 0.0

    def __post_init__(self):
        if not (self.eps_eq >= 0 and self.eps_mono >= 0):
            raise InvalidArgument(f"tolerances must be non-negative, got {self}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Grid:
    """Equally spaced samples of [0, 1], both endpoints included."""

    resolution: int
    points: np.ndarray

    def interior(self) -> np.ndarray:
        return self.points[1:-1]

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        # row-major: first index walks x, second walks y
        return np.meshgrid(self.points, self.points, indexing="ij")

    def __len__(self):
        return self.resolution


def make_grid(resolution: int) -> Grid:
    if isinstance(resolution, bool) or int(resolution) != resolution or resolution < 2:
        raise InvalidArgument(f"grid resolution must be an integer >= 2, got {resolution!r}")
    resolution = int(resolution)
    # i/(r-1) is correctly rounded, so breakpoints such as 0.5 and 0.75 land exactly
    pts = np.arange(resolution, dtype=np.float64) / (resolution - 1)
    pts[-1] = 1.0
    pts.setflags(write=False)
    return Grid(resolution, pts)


def approx_eq(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> bool:
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidArgument(f"approx_eq needs finite inputs, got {a!r}, {b!r}")
    return abs(a - b) <= tol.eps_eq


def as_array(v) -> np.ndarray:
    return np.asarray(v, dtype=np.float64)


def scalar_or_array(out: np.ndarray, *inputs):
    """Return a Python float when every input was a scalar."""
    if all(np.ndim(v) == 0 for v in inputs):
        return float(out)
    return out


def check_unit_interval(*values, what="argument"):
    for v in values:
        a = as_array(v)
        bad = ~((a >= 0.0) & (a <= 1.0))
        if np.any(bad):
            first = a[bad].flat[0] if a.ndim else float(a)
            raise InvalidArgument(f"{what} outside [0, 1]: {first!r}")
