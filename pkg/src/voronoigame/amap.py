"""Alpha-gain map: level-t boundary polylines over (x, y) interval space.

For a strictly increasing voter list v_1 < ... < v_n, the set of intervals
(x, y) whose alpha gain is at least t is the union over runs of t
consecutive voters v_i .. v_{i+t-1} of three half-planes:

    x < v_i,    y > v_{i+t-1},    y > x + 2 (v_{i+t-1} - v_i).

For fixed x the union is y > F_t(x) where F_t is the lower envelope of
one clamped-diagonal function per run, so its boundary is an xy-monotone
chain of horizontal, diagonal (slope 1), and vertical pieces.  The walk
below follows the envelope left to right: along a horizontal piece the
only exit is the run's own kink, along a diagonal the envelope is either
undercut by a later run's horizontal level or reaches the run's domain
end x = v_i and jumps upward.  Amortised by the level pointer the walk is
linear per level, quadratic overall, matching the map's complexity.

Level t separates alpha <= t-1 (on and below the chain) from alpha >= t
(strictly above); crossing any boundary point raises alpha by exactly 1,
so on a vertical line the level chains appear at strictly increasing y.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .coords import Coord, ExtendedCoord, NEG_INF, POS_INF
from .errors import RequiresDistinctVoters
from .instance import VoterSet


class SegmentKind(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class PolySegment:
    """One boundary piece; x1 <= x2 and y1 <= y2, ends may be infinite."""

    kind: SegmentKind
    x1: ExtendedCoord
    y1: ExtendedCoord
    x2: ExtendedCoord
    y2: ExtendedCoord

    def y_at(self, x0: Coord) -> Coord:
        """Crossing height of the vertical line x = x0 (non-vertical kinds)."""
        if self.kind is SegmentKind.HORIZONTAL:
            return self.y1
        if self.kind is SegmentKind.DIAGONAL:
            return x0 + (self.y2 - self.x2)  # slope 1: y - x is constant
        raise ValueError("vertical segments have no single crossing height")


@dataclass(frozen=True)
class BoundaryPolyline:
    """The level-t chain, leftmost piece first."""

    level: int
    segments: tuple[PolySegment, ...]


@dataclass(frozen=True)
class AMap:
    voters: VoterSet
    polylines: tuple[BoundaryPolyline, ...]  # levels 1 .. n*

    @property
    def segment_count(self) -> int:
        return sum(len(p.segments) for p in self.polylines)


def _level_chain(v: list[Coord], t: int) -> tuple[PolySegment, ...]:
    m = len(v) - t + 1
    H = [v[r + t - 1] for r in range(m)]  # horizontal level of run r
    D = [H[r] - v[r] for r in range(m)]  # half the diagonal offset
    K = [v[r] - D[r] for r in range(m)]  # kink: horizontal meets diagonal

    segs: list[PolySegment] = []

    def emit(kind: SegmentKind, x1, y1, x2, y2):
        if x1 == x2 and y1 == y2:
            return
        if segs and kind is SegmentKind.DIAGONAL:
            last = segs[-1]
            if (
                last.kind is SegmentKind.DIAGONAL
                and last.x2 == x1
                and last.y2 == y1
                and last.y2 - last.x2 == y2 - x2
            ):
                segs[-1] = PolySegment(kind, last.x1, last.y1, x2, y2)
                return
        segs.append(PolySegment(kind, x1, y1, x2, y2))

    r = 0
    mode = "H"
    cx: ExtendedCoord = NEG_INF
    cy = H[0]
    jptr = 1  # first run whose horizontal level may still matter
    while True:
        if mode == "H":
            emit(SegmentKind.HORIZONTAL, cx, H[r], K[r], H[r])
            cx = K[r]
            mode = "D"
        elif mode == "D":
            y_end = v[r] + 2 * D[r]
            while jptr < m and H[jptr] <= cy:
                jptr += 1
            found = None
            jj = jptr
            while jj < m and H[jj] < y_end:
                if D[jj] < D[r]:
                    found = jj
                    break
                jj += 1
            if found is not None:
                x_cross = H[found] - 2 * D[r]
                emit(SegmentKind.DIAGONAL, cx, cy, x_cross, H[found])
                cx, cy = x_cross, H[found]
                r, mode, jptr = found, "H", found + 1
            else:
                emit(SegmentKind.DIAGONAL, cx, cy, v[r], y_end)
                cx, cy = v[r], y_end
                mode = "V"
        else:  # vertical jump at the death of run r
            best_y: Optional[Coord] = None
            best_j = -1
            best_flat = False
            for j in range(r + 1, m):
                if best_y is not None and H[j] > best_y:
                    break  # later runs sit even higher
                flat = v[r] <= K[j]
                fj = H[j] if flat else v[r] + 2 * D[j]
                # on a tie the run still on its horizontal wins: the other
                # one is a rising diagonal and drops out immediately after
                if best_y is None or fj < best_y or (fj == best_y and flat and not best_flat):
                    best_y, best_j, best_flat = fj, j, flat
            if best_y is None:
                segs.append(PolySegment(SegmentKind.VERTICAL, v[r], cy, v[r], POS_INF))
                return tuple(segs)
            emit(SegmentKind.VERTICAL, v[r], cy, v[r], best_y)
            cy = best_y
            r = best_j
            mode = "H" if cx <= K[r] else "D"


@lru_cache(maxsize=16)
def build_a_map(V: VoterSet) -> AMap:
    """Boundary polylines for every level t = 1 .. n*.

    Cached: the map is threshold-independent and shared read-only across
    the per-threshold solver runs.
    """
    if not V.strictly_increasing:
        raise RequiresDistinctVoters("alpha-gain map needs distinct voters")
    v = list(V.coords)
    lines = tuple(
        BoundaryPolyline(level=t, segments=_level_chain(v, t)) for t in range(1, len(v) + 1)
    )
    return AMap(voters=V, polylines=lines)


def b_gain_at(V: VoterSet, x: ExtendedCoord, y: ExtendedCoord) -> int:
    """Population |V ∩ (x, y)|, either end may be infinite."""
    coords = V.coords
    lo = 0 if x is NEG_INF else bisect_right(coords, x)
    hi = len(coords) if y is POS_INF else bisect_left(coords, y)
    return max(0, hi - lo)
