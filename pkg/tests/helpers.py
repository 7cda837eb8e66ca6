"""Small independent oracles and generators shared by the test suite.

These deliberately avoid the library's own window/gain machinery: the
alpha oracle simulates a follower point directly through distance
comparisons, so gain computations are checked by a second route.
"""

from __future__ import annotations

import random
from fractions import Fraction

from voronoigame import VoterSet, is_finite


def brute_alpha(V: VoterSet, x, y) -> int:
    """Best single-point follower haul in (x, y) by direct simulation.

    The follower point q wins voter v iff |v - q| < distance from v to the
    nearest finite endpoint (and always, when neither endpoint is finite).
    The win count changes only where a win-region boundary crosses a
    voter, so testing voters, their images 2v - x and 2v - y, and all
    midpoints between consecutive candidates is exhaustive.
    """
    inside = [v for v in V if x < v < y]
    if not inside:
        return 0
    if not (is_finite(x) or is_finite(y)):
        return len(inside)

    def endpoint_dist(v):
        d = None
        if is_finite(x):
            d = v - x
        if is_finite(y):
            d = y - v if d is None else min(d, y - v)
        return d

    cands = set(inside)
    for v in inside:
        if is_finite(x):
            cands.add(2 * v - x)
        if is_finite(y):
            cands.add(2 * v - y)
    ordered = sorted(c for c in cands if x < c < y)
    probes = list(ordered)
    probes += [(ordered[i] + ordered[i + 1]) / 2 for i in range(len(ordered) - 1)]
    if is_finite(x) and ordered:
        probes.append((x + ordered[0]) / 2)
    if is_finite(y) and ordered:
        probes.append((ordered[-1] + y) / 2)
    best = 0
    for q in probes:
        won = sum(1 for v in inside if abs(v - q) < endpoint_dist(v))
        best = max(best, won)
    return best


def random_voterset(rng: random.Random, n: int, lo: int = 0, hi: int = 40, distinct: bool = True) -> VoterSet:
    if distinct:
        coords = rng.sample(range(lo, hi + 1), n)
    else:
        coords = [rng.randint(lo, hi) for _ in range(n)]
    return VoterSet.from_values(coords)


def random_rational(rng: random.Random, lo: int, hi: int, max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(lo * den, hi * den)
    return Fraction(num, den)
