"""Scalar reference formulas written from scratch in plain Python.

Nothing here imports the package, so agreement with it is evidence rather
than a tautology.  Where inputs are rational, Fraction gives exact values.
"""
from __future__ import annotations

import math
from fractions import Fraction


def lk(x, y):
    return min(1, 1 - x + y)


def kd(x, y):
    return max(1 - x, y)


def rc(x, y):
    return 1 - x + x * y


def gd(x, y):
    return 1 if x <= y else y


def gg(x, y):
    return 1 if x <= y else y / x


def rs(x, y):
    return 1 if x <= y else 0


def greatest(x, y):
    return 0 if (x == 1 and y == 0) else 1


def least(x, y):
    return 1 if (x == 0 or y == 1) else 0


def lg(x, y):
    if x <= y:
        return 1
    return 0 if y == 0 else math.log(x) / math.log(y)


IMPLICATIONS = {"LK": lk, "KD": kd, "RC": rc, "GD": gd, "GG": gg}


def yager_s(lam, a, b):
    return min(1.0, (a ** lam + b ** lam) ** (1.0 / lam))


def zlow(I):
    return lambda x, y: 0 if (x > 0 and y == 0) else I(x, y)


def zup(I):
    return lambda x, y: 0 if (x == 1 and y < 1) else I(x, y)


def zboth(I):
    return lambda x, y: 0 if ((x == 1 and y < 1) or (x > 0 and y == 0)) else I(x, y)


def construction(F, c1, c2, impls):
    """Generalized construction evaluated one point at a time."""
    return lambda x, y: F([I(a(x), b(y)) for I, a, b in zip(impls, c1, c2)])


def wmean(w):
    return lambda xs: sum(wi * xi for wi, xi in zip(w, xs))


def maxmin_mean(xs):
    return (max(xs) + min(xs)) / 2


def product(xs):
    return math.prod(xs)


def c2_piecewise(t):
    """0..0.5 identity, 0.5..0.75 slope 2, then flat at 1."""
    if t <= Fraction(1, 2):
        return t
    if t <= Fraction(3, 4):
        return 2 * t - Fraction(1, 2)
    return 1


def horizontal_threshold(e, impls):
    """Piecewise definition on horizontal strips e_{j-1} < y <= e_j."""
    n = len(impls)

    def I(x, y):
        if x == 0 or y == 1:
            return 1
        if y == 0:
            return e[1] * impls[0](x, 0)
        for j in range(1, n + 1):
            if e[j - 1] < y <= e[j]:
                w = e[j] - e[j - 1]
                return e[j - 1] + w * impls[j - 1](x, (y - e[j - 1]) / w)
        raise AssertionError(y)

    return I


def vertical_threshold(e, theta, impls):
    """Piecewise definition on vertical strips e_{j-1} <= x < e_j."""
    n = len(impls)

    def I(x, y):
        if x == 0 or y == 1:
            return 1
        if x == 1:
            return theta[n - 1] * impls[n - 1](1, y)
        for j in range(1, n + 1):
            if e[j - 1] <= x < e[j]:
                d = theta[j - 1] - theta[j]
                return theta[j] + d * impls[j - 1]((x - e[j - 1]) / (e[j] - e[j - 1]), y)
        raise AssertionError(x)

    return I


def ordinal_sum(e, impls):
    """Weighted mean of threshold-rescaled copies, summed box by box."""
    n = len(impls)

    def thr(k, t):
        lo, hi = e[k], e[k + 1]
        return 0 if t <= lo else (1 if t >= hi else (t - lo) / (hi - lo))

    def I(x, y):
        return sum((e[k + 1] - e[k]) * impls[k](thr(k, x), thr(k, y)) for k in range(n))

    return I


def grid(r):
    return [i / (r - 1) for i in range(r)]
