"""Core game semantics: strategies, payoffs, and per-interval gains.

The one-round game: the leader places k points, the follower answers with
l points, and a voter goes to the leader exactly when its distance to the
nearest leader point is <= its distance to the nearest follower point
(ties favour the leader).

The follower's options inside one open interval (x, y) between adjacent
leader points are summarised by two numbers:

  alpha  the most voters of V ∩ (x, y) one follower point can win, which
         equals the most voters coverable by an open interval of length
         (y - x) / 2;
  beta   what a second point adds, always |V ∩ (x, y)| - alpha.

A follower point q in (x, y) wins exactly the voters in the open window
((q+x)/2, (q+y)/2), so window length is (y-x)/2 and a run of voters with
closed span E fits some window iff 2E < y - x, strictly.  For a half line
(x may be -inf, y may be +inf) one point wins everything: alpha is the
whole population and beta is 0.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence, Union

from .coords import Coord, ExtendedCoord, NEG_INF, POS_INF, is_finite, parse_coord
from .errors import InvalidInstance, InvalidInterval
from .instance import VoterSet

Role = Literal["leader", "follower"]


@dataclass(frozen=True)
class Strategy:
    """A sorted multiset of placed points, tagged with who plays it."""

    points: tuple[Coord, ...]
    role: Role

    def __post_init__(self):
        if any(self.points[i] > self.points[i + 1] for i in range(len(self.points) - 1)):
            raise InvalidInstance("strategy points must be sorted")

    @staticmethod
    def leader(points: Iterable) -> "Strategy":
        return Strategy(tuple(sorted(parse_coord(p) for p in points)), "leader")

    @staticmethod
    def follower(points: Iterable) -> "Strategy":
        return Strategy(tuple(sorted(parse_coord(p) for p in points)), "follower")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


StrategyLike = Union[Strategy, Sequence]


def _points_of(s: StrategyLike, role: Role) -> tuple[Coord, ...]:
    if isinstance(s, Strategy):
        return s.points
    return tuple(sorted(parse_coord(p) for p in s))


def min_distance(points: Sequence[Coord], v: Coord) -> Coord:
    """Distance from v to the nearest of the sorted points."""
    i = bisect_left(points, v)
    best = None
    if i < len(points):
        best = points[i] - v
    if i > 0:
        d = v - points[i - 1]
        if best is None or d < best:
            best = d
    return best


def payoff(V: VoterSet, P: StrategyLike, Q: StrategyLike) -> int:
    """Number of voters the leader wins (distance ties go to the leader)."""
    p = _points_of(P, "leader")
    q = _points_of(Q, "follower")
    if not p:
        raise InvalidInstance("leader strategy must place at least one point")
    if not q:
        return V.n_star
    won = 0
    for v in V:
        if min_distance(p, v) <= min_distance(q, v):
            won += 1
    return won


@dataclass(frozen=True)
class GainPair:
    """Follower gains inside one open interval between leader points."""

    alpha: int
    beta: int

    def __post_init__(self):
        if not 0 <= self.beta <= self.alpha:
            raise InvalidInstance(f"gain pair out of order: {self}")

    @property
    def population(self) -> int:
        return self.alpha + self.beta


def interval_gains(V: VoterSet, x: ExtendedCoord, y: ExtendedCoord) -> GainPair:
    """GainPair of the open interval (x, y); either end may be infinite."""
    if not x < y:
        raise InvalidInterval(f"need x < y, got ({x!r}, {y!r})")
    coords = V.coords
    lo = 0 if x is NEG_INF else bisect_right(coords, x)
    hi = len(coords) if y is POS_INF else bisect_left(coords, y)
    pop = hi - lo
    if pop == 0:
        return GainPair(0, 0)
    if not (is_finite(x) and is_finite(y)):
        return GainPair(pop, 0)
    bound = y - x  # a run with closed span E is coverable iff 2E < bound
    best = 1
    i = lo
    for j in range(lo + 1, hi):
        while 2 * (coords[j] - coords[i]) >= bound:
            i += 1
        if j - i + 1 > best:
            best = j - i + 1
    return GainPair(best, pop - best)
