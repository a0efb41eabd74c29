"""Reference instances used by the tables, the acceptance suite and the CLI demos."""
from __future__ import annotations

import numpy as np

from . import aggregations as agg
from .chains import chain_from_components, example_1ii as example_1ii_map, power, sin2
from .construction import build, build_classic
from .implications import catalog, yager_sn
from .maps import UnaryMap, identity
from .methods import complementary_theta, horizontal_threshold, ordinal_sum_example, vertical_threshold
from .negations import make_negation

BREAKPOINTS = (0.0, 0.5, 0.75, 1.0)


def two_t_minus_t2() -> UnaryMap:
    return UnaryMap(lambda t: t * (2.0 - t), "2t-t^2", "increasing")


def example_1i():
    """max of KD through the chain (t^2, t); equals max(1 - x^2, y)."""
    c = chain_from_components([power(2), identity()])
    return build_classic(agg.maximum(2), c, catalog("KD"), name="example_1i")


def example_1i_closed(x, y):
    return np.maximum(1.0 - np.asarray(x) ** 2, y)


def example_1ii():
    c = chain_from_components([identity(), example_1ii_map()])
    return build_classic(agg.minimum(2), c, catalog("LK"), name="example_1ii")


def example_1ii_closed(x, y):
    """min(1, 1 - x + y, 1 - c2(x) + c2(y)), the last term expanded on the 3x3 partition."""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    bx = np.where(x <= 0.5, 0, np.where(x <= 0.75, 1, 2))
    by = np.where(y <= 0.5, 0, np.where(y <= 0.75, 1, 2))
    third = np.select(
        [(bx == 0) & (by == 0), (bx == 0) & (by == 1), (bx == 0) & (by == 2),
         (bx == 1) & (by == 0), (bx == 1) & (by == 1), (bx == 1) & (by == 2),
         (bx == 2) & (by == 0), (bx == 2) & (by == 1), (bx == 2) & (by == 2)],
        [1 - x + y, 0.5 - x + 2 * y, 2 - x,
         1.5 - 2 * x + y, 1 - 2 * x + 2 * y, 2.5 - 2 * x,
         y, 2 * y - 0.5, np.ones_like(x)])
    return np.minimum(np.minimum(1.0, 1.0 - x + y), third)


def example_1ii_printed_table(x, y):
    """A mis-signed 3x3 expansion: it equals c2(x) + c2(y), not 1 - c2(x) + c2(y).

    Kept so the tests can pin down which expansion the construction matches.
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    bx = np.where(x <= 0.5, 0, np.where(x <= 0.75, 1, 2))
    by = np.where(y <= 0.5, 0, np.where(y <= 0.75, 1, 2))
    return np.select(
        [(bx == 0) & (by == 0), (bx == 0) & (by == 1), (bx == 0) & (by == 2),
         (bx == 1) & (by == 0), (bx == 1) & (by == 1), (bx == 1) & (by == 2),
         (bx == 2) & (by == 0), (bx == 2) & (by == 1), (bx == 2) & (by == 2)],
        [x + y, x + 2 * y - 0.5, x + 1,
         2 * x + y - 0.5, 2 * (x + y) - 1, 2 * x + 0.5,
         1 + y, 2 * y + 0.5, 2 * np.ones_like(x)])


def cbnp():
    """product of (LK, KD) with c1 = (2t - t^2, t) and c2 = (sqrt t, sqrt t)."""
    c1 = chain_from_components([two_t_minus_t2(), identity()])
    c2 = chain_from_components([power(0.5), power(0.5)])
    return build(agg.product(2), c1, c2, [catalog("LK"), catalog("KD")], name="cbnp")


def cbnp_closed(x, y):
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    s = np.sqrt(y)
    return np.minimum(1.0, 1.0 - 2.0 * x + x * x + s) * np.maximum(1.0 - x, s)


def cbnp_companion_negation():
    """N(x) = 1 - x^(1/3), the inverse of the natural negation (1 - x)^3 of ``cbnp``."""
    return make_negation(lambda x: 1.0 - np.cbrt(x), "1-cbrt")


def negation_example():
    c1 = chain_from_components([power(2), two_t_minus_t2(), identity()])
    c2 = chain_from_components([identity(), power(2), power(3)])
    return build(agg.maxmin_mean(), c1, c2, [catalog("LK"), catalog("RC"), catalog("KD")],
                 name="negation_example")


def cpn():
    """Weighted mean of Yager (S, Nc)-implications, lambda = 1, 1/2, 1/3, sin^2 chains."""
    c = chain_from_components([sin2(), sin2(), sin2()])
    impls = [yager_sn(1.0), yager_sn(0.5), yager_sn(1.0 / 3.0)]
    return build(agg.weighted_mean([1 / 3, 1 / 3, 1 / 3]), c, c, impls, name="cpn")


def pit_example(impls=None):
    """product F with c_ij(x) = x^(i+j)."""
    c1 = chain_from_components([power(2), power(3)])
    c2 = chain_from_components([power(3), power(4)])
    impls = impls or [catalog("RS"), catalog("LG")]
    return build(agg.product(2), c1, c2, impls, name="pit_example")


def lk_rc_kd():
    return [catalog("LK"), catalog("RC"), catalog("KD")]


def hthreshold_fixture():
    return horizontal_threshold(BREAKPOINTS, lk_rc_kd())


def vthreshold_fixture():
    return vertical_threshold(BREAKPOINTS, complementary_theta(BREAKPOINTS), lk_rc_kd())


def osum_fixture():
    return ordinal_sum_example(BREAKPOINTS, lk_rc_kd())
