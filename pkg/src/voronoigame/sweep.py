"""Left-to-right sweep over the gain map and span enumeration.

A span at position x0 lists, for the family of intervals (x0, y) with y
increasing, every breakpoint where the gain pair of the interval changes.
Breakpoints come from two sources: the vertical line x = x0 crossing a
level-t boundary chain at height y raises alpha to t once y passes the
crossing, and each voter strictly right of x0 joins the population once
y passes it.  Between breakpoints both gains are constant, so the spans
carry everything a solver needs to know about intervals opening at x0.

Span tuples are (n, a, b, y): n voters lie strictly left of y, the
interval (x0, y) has gains (a, b), and y itself is excluded.  The list
always ends with (n*, c, 0, +inf) for the half-line (x0, +inf), where c
counts voters right of x0.  Because the level chains are strictly nested,
exactly c chains cross any vertical line, one per achievable alpha value.

The sweep state advances monotonically; each chain keeps a cursor into
its segment list, so a full left-to-right pass costs time linear in the
map size regardless of how many stops it makes.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .amap import AMap, SegmentKind, build_a_map
from .coords import Coord, ExtendedCoord, NEG_INF, POS_INF
from .errors import InternalError, SweepOrderViolation
from .instance import VoterSet


class SpanTuple(NamedTuple):
    n: int  # voters strictly below y
    a: int  # alpha gain of (x0, y)
    b: int  # beta gain of (x0, y)
    y: ExtendedCoord


@dataclass
class SweepState:
    amap: AMap
    x0: ExtendedCoord = NEG_INF
    cursors: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.cursors:
            self.cursors = [0] * len(self.amap.polylines)
            self._settle()

    def _settle(self):
        # park each cursor on the segment crossed just right of x0
        for t_idx, line in enumerate(self.amap.polylines):
            segs = line.segments
            i = self.cursors[t_idx]
            while i < len(segs) and (
                segs[i].kind is SegmentKind.VERTICAL or not segs[i].x2 > self.x0
            ):
                i += 1
            self.cursors[t_idx] = i

    def crossing(self, t: int) -> Optional[Coord]:
        """Height where line x = x0 (approached from the right) meets chain t."""
        line = self.amap.polylines[t - 1]
        i = self.cursors[t - 1]
        if i >= len(line.segments):
            return None
        seg = line.segments[i]
        if seg.kind is SegmentKind.HORIZONTAL:
            return seg.y1
        return seg.y_at(self.x0)  # diagonal; x0 is finite once past the leading piece

    @property
    def voters(self) -> VoterSet:
        return self.amap.voters


def sweep_state(V: VoterSet) -> SweepState:
    return SweepState(amap=build_a_map(V))


def sweep_advance(state: SweepState, x_new: ExtendedCoord) -> SweepState:
    if x_new < state.x0:
        raise SweepOrderViolation(f"sweep moved left: {state.x0!r} -> {x_new!r}")
    state.x0 = x_new
    state._settle()
    return state


def span_all(state: SweepState) -> tuple[SpanTuple, ...]:
    """All gain breakpoints for intervals opening at the current position."""
    coords = state.voters.coords
    n_star = len(coords)
    x0 = state.x0
    n0 = 0 if x0 is NEG_INF else bisect_right(coords, x0)
    c = n_star - n0

    crossings = []
    for t in range(1, n_star + 1):
        y = state.crossing(t)
        if y is None:
            break  # nested chains die outward: higher levels are gone too
        crossings.append(y)
    if len(crossings) != c:
        raise InternalError(
            f"{len(crossings)} chains crossed at x0={x0!r}, expected {c}"
        )

    ys = sorted(set(crossings) | set(coords[n0:]))
    out = []
    a = 0
    pop = 0
    ci = 0
    vi = n0
    for y in ys:
        out.append(SpanTuple(n=n0 + pop, a=a, b=pop - a, y=y))
        while ci < len(crossings) and crossings[ci] == y:
            ci += 1
            a += 1
        while vi < n_star and coords[vi] == y:
            vi += 1
            pop += 1
    out.append(SpanTuple(n=n_star, a=c, b=0, y=POS_INF))
    return tuple(out)


def spans_at(V: VoterSet, x0: ExtendedCoord) -> tuple[SpanTuple, ...]:
    """One-shot span query; builds a fresh sweep each call."""
    return span_all(sweep_advance(sweep_state(V), x0))


def span_reference(V: VoterSet, x0: ExtendedCoord) -> tuple[SpanTuple, ...]:
    """Quadratic re-derivation of span_all from the half-plane definition.

    Evaluates each level's lower envelope at x0 by direct minimisation over
    runs and reads the gains of every candidate interval from the interval
    oracle, bypassing the chain walk entirely.
    """
    from .game import interval_gains  # local import: tests patch this module lightly

    coords = V.coords
    n_star = len(coords)
    n0 = 0 if x0 is NEG_INF else bisect_right(coords, x0)

    crossings = []
    for t in range(1, n_star + 1):
        best = None
        for i in range(n_star - t + 1):
            if not coords[i] > x0:
                continue  # run already dead at x0
            h = coords[i + t - 1]
            d = h - coords[i]
            f = h if (x0 is NEG_INF or x0 + 2 * d <= h) else x0 + 2 * d
            if best is None or f < best:
                best = f
        if best is not None:
            crossings.append(best)

    out = []
    for y in sorted(set(crossings) | set(coords[n0:])):
        g = interval_gains(V, x0, y)
        out.append(SpanTuple(n=n0 + g.population, a=g.alpha, b=g.beta, y=y))
    g = interval_gains(V, x0, POS_INF)
    out.append(SpanTuple(n=n_star, a=g.alpha, b=g.beta, y=POS_INF))
    return tuple(out)


def span_reference_table(
    V: VoterSet, xs: Optional[Sequence[ExtendedCoord]] = None
) -> dict[ExtendedCoord, tuple[SpanTuple, ...]]:
    """span_reference over a grid of positions, default: voters, midpoints,
    and one point beyond each end."""
    if xs is None:
        coords = V.coords
        grid = {coords[0] - 1, coords[-1] + 1}
        grid.update(coords)
        grid.update((u + w) / 2 for u, w in zip(coords, coords[1:]))
        xs = sorted(grid)
    return {x0: span_reference(V, x0) for x0 in xs}
