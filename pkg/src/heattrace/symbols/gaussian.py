"""Gaussian omega-moments used to finish the symbol integrals.

int_{R^n} w_{a1} ... w_{a2k} exp(-g^{ab} w_a w_b) dw
    = pi^(n/2) sqrt(det g) 2^(-k) sum over pairings of prod g_{pair}
(Wick/Isserlis), e.g. the second moment 1/2 pi^(n/2) sqrt(g) g_ab.
"""

from __future__ import annotations

import math

import numpy as np


def pairings(idx: tuple[int, ...]):
    """All perfect matchings of a tuple of indices."""
    if not idx:
        yield ()
        return
    first, rest = idx[0], idx[1:]
    for i in range(len(rest)):
        pair = (first, rest[i])
        for tail in pairings(rest[:i] + rest[i + 1:]):
            yield (pair,) + tail


def gaussian_moment(metric, indices) -> float:
    g = np.atleast_2d(np.asarray(metric, dtype=float))
    n = g.shape[0]
    indices = tuple(indices)
    base = math.pi ** (n / 2) * math.sqrt(np.linalg.det(g))
    if len(indices) % 2:
        return 0.0
    k = len(indices) // 2
    total = sum(math.prod(g[a, b] for a, b in p) for p in pairings(indices))
    return base * 0.5**k * total


def second_moment(metric, a: int, b: int) -> float:
    return gaussian_moment(metric, (a, b))


def fourth_moment(metric, a: int, b: int, c: int, d: int) -> float:
    return gaussian_moment(metric, (a, b, c, d))
