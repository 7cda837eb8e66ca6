"""Reference engine: event-driven left-to-right solve for one threshold.

Subproblem cells fire in ascending order of their pending position (ties
broken by key), each firing enumerating the spans at that position and
offering extensions one interval to the right.  Two structural facts make
a single pass sound: a span never ends at or before its origin, and an
extension always covers at least one new voter, so every write lands in a
strictly later voter window than its source and no fired cell is ever
improved afterwards.  The loop asserts that instead of trusting it.

This engine runs entirely on exact rationals and the public sweep-state
API.  It is the correctness anchor for the array-based fast engine, which
must reproduce its table bit for bit.
"""

from __future__ import annotations

from heapq import heappop, heappush

from .coords import is_finite
from .delta import delta_triples, oplus
from .dptable import BackRef, SubproblemKey, SubproblemTable
from .elementary import FLAGS, elementary_value
from .errors import InternalError
from .instance import VoterSet
from .sweep import span_all, sweep_advance, sweep_state


def compute_solutions(V: VoterSet, k_star: int, l_star: int, tau: int) -> SubproblemTable:
    n_star = V.n_star
    table = SubproblemTable()
    heap = []  # (x, k, l, gamma, flag, n): same x implies same n

    def schedule(key: SubproblemKey, value) -> None:
        if is_finite(value):
            heappush(heap, (value, key.k, key.l, key.gamma, key.flag, key.n))

    for n in range(n_star + 1):
        for l in range(min(1, l_star) + 1):
            for gamma in range(n + 1):
                for flag in FLAGS:
                    value = elementary_value(V, tau, n, l, gamma, flag)
                    if value is None:
                        continue
                    key = SubproblemKey(n, 0, l, gamma, flag)
                    table.offer(key, value, None)
                    schedule(key, value)

    state = sweep_state(V)
    fired = set()
    while heap:
        x, k, l, gamma, flag, n = heappop(heap)
        key = SubproblemKey(n, k, l, gamma, flag)
        cell = table.get(key)
        if cell is None or cell.value != x:
            continue  # superseded before firing
        if key in fired:
            raise InternalError(f"cell fired twice: {key}")
        fired.add(key)
        if k == k_star:
            continue  # no budget for another point
        if l_star - l > 2 * (k_star - k) or tau * (l_star - l) > n_star - n:
            continue  # dead end: remaining follower points cannot all pay off
        if any(
            (c := table.get(SubproblemKey(n, k, l, g, flag))) is not None
            and c.value >= x
            for g in range(gamma + 1, n_star + 1)
        ):
            continue  # a same-shape cell keeps more voters without standing left
        sweep_advance(state, x)
        for span in span_all(state):
            if span.n <= n:
                continue  # the next interval must cover a new voter
            for move in delta_triples(tau, span.a, span.b):
                if move.flag_in != flag:
                    continue
                l_t = l + move.points
                if l_t > l_star:
                    continue
                gamma_t = gamma + (span.n - n) - oplus(move.points, span.a, span.b)
                target = SubproblemKey(span.n, k + 1, l_t, gamma_t, move.flag_out)
                back = BackRef(n, span.a, span.b, move.points, flag)
                if table.offer(target, span.y, back):
                    if target in fired:
                        raise InternalError(f"write after firing: {target}")
                    schedule(target, span.y)
    return table
