"""Brute-force oracle over a quarter-step candidate grid.

Enumerates every size-k leader placement on the grid covering
[v_1 - 1, v_n + 1] in steps of 1/4 and scores each against the follower's
best reply, read off precomputed per-interval gain tables.  Moving any
point to the nearest grid line never changes who wins which voter for
integer voter coordinates, and padding a placement with far-right points
never hurts, so the grid maximum over exactly-k subsets is the true value.

The numpy scoring of the winning placement is re-checked through the exact
rational response machinery before being returned; a disagreement aborts
loudly rather than shipping a wrong certificate.  Instances are capped at
seven voters and three leader points to keep the search honest but quick.

adversary_check hammers a claimed strategy value with seeded random
follower replies; it returns a counterexample reply if one beats the
claim, None otherwise.
"""

from __future__ import annotations

import itertools
import random
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .coords import Coord
from .errors import InternalError, InvalidInstance, OracleTooLarge
from .gains import canonical_response
from .game import Strategy, payoff
from .instance import VoterSet, normalize_instance

MAX_VOTERS = 7
MAX_LEADER_POINTS = 3


def candidate_grid(V: VoterSet) -> list[int]:
    """Quarter-step grid in units of 1/4 (returned values are 4x positions)."""
    lo = 4 * (min(V.coords) - 1)
    hi = 4 * (max(V.coords) + 1)
    return list(range(int(lo), int(hi) + 1))


def _alpha(inside: list[int], width: int) -> int:
    # longest voter run a single interior point can sweep: strict inequality
    best = 0
    i = 0
    for j in range(len(inside)):
        while 2 * (inside[j] - inside[i]) >= width:
            i += 1
        best = max(best, j - i + 1)
    return best


def oracle_gamma(
    voters: Sequence, k: int, l: int
) -> tuple[int, tuple[Coord, ...]]:
    """Exhaustive leader value and one optimal placement."""
    inst = normalize_instance(voters, k, l)
    V = inst.voters
    n_star = V.n_star
    if n_star > MAX_VOTERS:
        raise OracleTooLarge(f"{n_star} voters exceed the oracle cap {MAX_VOTERS}")
    if k > MAX_LEADER_POINTS:
        raise OracleTooLarge(f"k={k} exceeds the oracle cap {MAX_LEADER_POINTS}")
    if any(c.denominator != 1 for c in V.coords):
        raise InvalidInstance("the oracle needs integer voter coordinates")

    grid = candidate_grid(V)
    g = len(grid)
    v4 = [4 * int(c) for c in V.coords]

    # per-interval gain tables in grid units
    a_pair = np.zeros((g, g), dtype=np.int16)
    b_pair = np.zeros((g, g), dtype=np.int16)
    for i in range(g):
        lo = bisect_right(v4, grid[i])
        for j in range(i + 1, g):
            hi = bisect_left(v4, grid[j])
            inside = v4[lo:hi]
            al = _alpha(inside, grid[j] - grid[i])
            a_pair[i, j] = al
            b_pair[i, j] = len(inside) - al
    a_left = np.array([bisect_left(v4, x) for x in grid], dtype=np.int16)
    a_right = np.array([n_star - bisect_right(v4, x) for x in grid], dtype=np.int16)

    idx = np.array(list(itertools.combinations(range(g), k)), dtype=np.int32)
    cols = [a_left[idx[:, 0]], np.zeros(len(idx), dtype=np.int16)]
    for t in range(k - 1):
        cols.append(a_pair[idx[:, t], idx[:, t + 1]])
        cols.append(b_pair[idx[:, t], idx[:, t + 1]])
    cols.append(a_right[idx[:, -1]])
    cols.append(np.zeros(len(idx), dtype=np.int16))
    gains = np.stack(cols, axis=1)

    take = min(l, gains.shape[1])
    gains.sort(axis=1)
    winnings = gains[:, gains.shape[1] - take :].sum(axis=1, dtype=np.int32)
    keeps = n_star - winnings
    best = int(np.argmax(keeps))
    best_keep = int(keeps[best])

    points = tuple(Fraction(grid[t], 4) for t in idx[best])
    _, winnings_exact = canonical_response(V, Strategy(points, "leader"), l)
    if n_star - winnings_exact != best_keep:
        raise InternalError(
            f"grid scoring says {best_keep}, exact response says {n_star - winnings_exact}"
        )
    return best_keep, points


def adversary_check(
    voters: Sequence,
    points: Sequence,
    l: int,
    claimed: int,
    trials: int = 1000,
    seed: int = 0,
) -> Optional[tuple[Coord, ...]]:
    """Seeded random follower replies; returns one beating the claim, else None."""
    inst = normalize_instance(voters, max(1, len(points)), l)
    V = inst.voters
    P = Strategy(tuple(Fraction(p) for p in points), "leader")
    rng = random.Random(seed)
    lo = min(V.coords) - 2
    hi = max(V.coords) + 2

    def random_point() -> Fraction:
        roll = rng.random()
        if roll < 0.4:
            return Fraction(rng.randint(int(4 * lo), int(4 * hi)), 4)
        if roll < 0.7:
            p = rng.choice(P.points)
            return p + Fraction(rng.randint(-8, 8), 8)
        v = rng.choice(V.coords)
        return v + Fraction(rng.choice((-2, -1, 0, 1, 2)), 4)

    for _ in range(trials):
        Q = Strategy(tuple(sorted(random_point() for _ in range(l))), "follower")
        if payoff(V, P, Q) < claimed:
            return Q.points
    return None
