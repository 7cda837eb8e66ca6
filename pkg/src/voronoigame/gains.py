"""Gain sequences, the canonical follower response, and thresholds.

For a leader strategy P = {p_1 < ... < p_k} with sentinels p_0 = -inf and
p_{k+1} = +inf, every open interval (p_i, p_{i+1}) contributes its alpha
and beta gain.  The 2k+2 gains sorted in non-increasing order form the
gain sequence; ties break toward the smaller interval index, and alpha
before beta within one interval.  The canonical follower response takes
the first l entries of that sequence, which is a maximising response:
alpha >= beta per interval plus the tie rule guarantee that a prefix never
selects a beta without its alpha.

The l-threshold of a sequence tau_1 >= tau_2 >= ... is any integer between
tau_{l+1} and tau_l; it is "strict" when tau_l >= tau > tau_{l+1} and
"loose" when tau = tau_{l+1}.  tau_0 counts as +inf so that a 0-threshold
above tau_1 is strict, and indices past the sequence end count as 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .coords import Coord, ExtendedCoord, NEG_INF, POS_INF, is_finite
from .errors import InvalidInstance, InvalidRepresentation
from .game import GainPair, Strategy, StrategyLike, _points_of, interval_gains
from .instance import VoterSet


class GainKind(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"


@dataclass(frozen=True)
class GainEntry:
    value: int
    interval: int
    kind: GainKind

    @property
    def sort_key(self):
        return (-self.value, self.interval, 0 if self.kind is GainKind.ALPHA else 1)


@dataclass(frozen=True)
class GainSequence:
    """All 2k+2 gains of a leader strategy, sorted non-increasing."""

    entries: tuple[GainEntry, ...]
    pairs: tuple[GainPair, ...]  # per interval 0..k, unsorted

    @property
    def k(self) -> int:
        return len(self.pairs) - 1

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    def tau(self, i: int) -> Union[int, ExtendedCoord]:
        """tau_i with the conventions tau_0 = +inf and tau_{i>end} = 0."""
        if i < 0:
            raise InvalidInstance(f"threshold index {i} negative")
        if i == 0:
            return POS_INF
        if i <= len(self.entries):
            return self.entries[i - 1].value
        return 0


class ThresholdKind(enum.Enum):
    STRICT = "strict"
    LOOSE = "loose"
    INVALID = "invalid"


def _interval_bounds(points: Sequence[Coord], i: int) -> tuple[ExtendedCoord, ExtendedCoord]:
    x: ExtendedCoord = NEG_INF if i == 0 else points[i - 1]
    y: ExtendedCoord = POS_INF if i == len(points) else points[i]
    return x, y


def gain_sequence(V: VoterSet, P: StrategyLike) -> GainSequence:
    """Sorted gains of all k+1 intervals induced by P (duplicates allowed)."""
    points = _points_of(P, "leader")
    pairs = []
    for i in range(len(points) + 1):
        x, y = _interval_bounds(points, i)
        if is_finite(x) and is_finite(y) and x == y:
            pairs.append(GainPair(0, 0))  # repeated leader point, empty slot
        else:
            pairs.append(interval_gains(V, x, y))
    entries = []
    for i, pair in enumerate(pairs):
        entries.append(GainEntry(pair.alpha, i, GainKind.ALPHA))
        entries.append(GainEntry(pair.beta, i, GainKind.BETA))
    entries.sort(key=lambda e: e.sort_key)
    return GainSequence(entries=tuple(entries), pairs=tuple(pairs))


@dataclass(frozen=True)
class SequenceRepresentation:
    """How many follower points go to each interval: m_i in {0, 1, 2}."""

    m: tuple[int, ...]

    def __post_init__(self):
        if any(mi not in (0, 1, 2) for mi in self.m):
            raise InvalidRepresentation(f"entries outside 0..2: {self.m}")

    @property
    def total_points(self) -> int:
        return sum(self.m)


def canonical_response(V: VoterSet, P: StrategyLike, l: int) -> tuple[SequenceRepresentation, int]:
    """Optimal follower selection: the first l entries of the gain sequence.

    Returns the representation and the follower's winnings.  l beyond 2k+2
    simply selects everything.
    """
    if l < 0:
        raise InvalidInstance(f"follower budget {l} negative")
    seq = gain_sequence(V, P)
    take = min(l, len(seq.entries))
    m = [0] * len(seq.pairs)
    winnings = 0
    for e in seq.entries[:take]:
        m[e.interval] += 1
        winnings += e.value
    return SequenceRepresentation(tuple(m)), winnings


def _alpha_group(V: VoterSet, x: ExtendedCoord, y: ExtendedCoord, alpha: int) -> tuple[Coord, Coord]:
    """Leftmost run of alpha voters in (x, y) coverable by a half-length window."""
    inside = [v for v in V if x < v < y]
    if is_finite(x) and is_finite(y):
        bound = y - x
        for i in range(len(inside) - alpha + 1):
            if 2 * (inside[i + alpha - 1] - inside[i]) < bound:
                return inside[i], inside[i + alpha - 1]
        raise InvalidRepresentation("no voter group achieves the alpha gain")
    return inside[0], inside[-1]  # half line: everything is one group


def _single_point(V: VoterSet, x: ExtendedCoord, y: ExtendedCoord) -> Coord:
    """A point in (x, y) winning exactly the alpha gain of the interval."""
    alpha = interval_gains(V, x, y).alpha
    if alpha == 0:
        if is_finite(x) and is_finite(y):
            return (x + y) / 2
        return y - 1 if is_finite(y) else x + 1
    u1, ut = _alpha_group(V, x, y, alpha)
    # q wins exactly the voters in ((q+x)/2, (q+y)/2), so q must lie in
    # (max(x, 2*ut - y), min(y, 2*u1 - x)); use the group's window centre
    # when feasible, else the centre of the feasible range.
    lo = NEG_INF if not is_finite(y) else 2 * ut - y
    if is_finite(x):
        lo = x if lo is NEG_INF else max(lo, x)
    hi = POS_INF if not is_finite(x) else 2 * u1 - x
    if is_finite(y):
        hi = y if hi is POS_INF else min(hi, y)
    centre = (u1 + ut) / 2
    if lo < centre < hi:
        return centre
    return (lo + hi) / 2  # lo, hi finite whenever the centre can miss


def _two_points(V: VoterSet, x: Coord, y: Coord) -> tuple[Coord, Coord]:
    """Points near both ends of bounded (x, y), winning its whole population."""
    inside = [v for v in V if x < v < y]
    eps = (y - x) / 4
    for v in inside:
        eps = min(eps, min(v - x, y - v) / 2)
    return x + eps, y - eps


def realize_response(V: VoterSet, P: StrategyLike, rep: SequenceRepresentation) -> Strategy:
    """Explicit follower points achieving exactly the winnings rep encodes."""
    points = _points_of(P, "leader")
    if not points:
        raise InvalidRepresentation("leader strategy must be non-empty")
    if len(rep.m) != len(points) + 1:
        raise InvalidRepresentation(
            f"representation has {len(rep.m)} slots for {len(points) + 1} intervals"
        )
    placed: list[Coord] = []
    for i, mi in enumerate(rep.m):
        if mi == 0:
            continue
        x, y = _interval_bounds(points, i)
        if is_finite(x) and is_finite(y) and x == y:
            raise InvalidRepresentation(f"interval {i} is degenerate")
        if mi == 1:
            placed.append(_single_point(V, x, y))
        elif is_finite(x) and is_finite(y):
            placed.extend(_two_points(V, x, y))
        else:
            # half line: the winning point plus a harmless second one
            q = _single_point(V, x, y)
            placed.extend((q, q + 1) if is_finite(x) else (q - 1, q))
    return Strategy.follower(placed)


def classify_threshold(seq: GainSequence, l: int, tau: int) -> ThresholdKind:
    """Whether integer tau is a strict, loose, or invalid l-threshold of seq."""
    if l < 0 or l > len(seq.entries):
        raise InvalidInstance(f"l={l} outside 0..{len(seq.entries)}")
    if tau < 0:
        raise InvalidInstance(f"threshold {tau} negative")
    upper = seq.tau(l)
    lower = seq.tau(l + 1)
    if upper >= tau > lower:
        return ThresholdKind.STRICT
    if tau == lower:
        return ThresholdKind.LOOSE
    return ThresholdKind.INVALID


def trivial_strategy(V: VoterSet, k: int, l: int) -> tuple[Strategy, int]:
    """Sit on the k most popular distinct voter spots; report the payoff.

    Optimal whenever k covers every distinct coordinate or l >= 2k (the
    follower can flank each leader point, leaving the leader only voters
    it sits on).  Ties in multiplicity resolve toward smaller coordinates.
    """
    if k < 1:
        raise InvalidInstance(f"leader budget {k} must be positive")
    counts: dict[Coord, int] = {}
    for v in V:
        counts[v] = counts.get(v, 0) + 1
    ranked = sorted(counts.items(), key=lambda cv: (-cv[1], cv[0]))
    chosen = sorted(c for c, _ in ranked[:k])
    strategy = Strategy(tuple(chosen), "leader")
    _, winnings = canonical_response(V, strategy, l)
    return strategy, V.n_star - winnings
