"""Slow, independent reference routines used by the test suite.

Nothing in the decision path imports this module.
"""
from __future__ import annotations

from .graph import CriticalGraph
from .primes import Factorization

MAX_EXPONENT = 64


def brute_factor_power(base: int, k: int, delta: int) -> Factorization:
    """Factor base^k + delta by plain trial division over every integer d >= 2."""
    if base not in (2, 3):
        raise ValueError("base must be 2 or 3")
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    if not 1 <= k <= MAX_EXPONENT:
        raise ValueError(f"exponent {k} outside 1..{MAX_EXPONENT}")
    m = base**k + delta
    factors: dict[int, int] = {}
    rest, d = m, 2
    while d * d <= rest:
        while rest % d == 0:
            factors[d] = factors.get(d, 0) + 1
            rest //= d
        d += 1
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    return Factorization(m, factors)


def brute_is_subgraph(g1: CriticalGraph, g2: CriticalGraph) -> bool:
    for v in g1.vertices:
        found = False
        for w in g2.vertices:
            if v == w:
                found = True
                break
        if not found:
            return False
    for e in g1.edges:
        found = False
        for f in g2.edges:
            if e[0] == f[0] and e[1] == f[1]:
                found = True
                break
        if not found:
            return False
    return True
