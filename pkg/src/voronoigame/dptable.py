"""Cell store for the threshold dynamic program.

A cell <n, k, l, gamma, flag> records one family of partial leader
strategies: k points committed, the next one pending, n voters strictly
left of the pending position, the follower having spent l points so far
and the leader keeping gamma of those n voters.  The cell value is the
largest achievable pending position; pushing the pending point right can
only keep more options open, so dominance is one-dimensional.  A full
strategy parks its virtual (k*+1)-th point at +inf, which is why winners
are read off cells whose value is +inf exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .coords import ExtendedCoord, POS_INF, is_finite
from .delta import FLAG_LOOSE, FLAG_STRICT, oplus
from .errors import InternalError
from .instance import VoterSet


class SubproblemKey(NamedTuple):
    n: int
    k: int
    l: int
    gamma: int
    flag: int


class BackRef(NamedTuple):
    """Predecessor data: its size, this interval's gains, points spent."""

    n: int
    a: int
    b: int
    points: int
    flag: int


@dataclass
class Cell:
    value: ExtendedCoord
    back: Optional[BackRef]  # None for elementary cells


class SubproblemTable:
    def __init__(self):
        self.cells: dict[SubproblemKey, Cell] = {}

    def get(self, key: SubproblemKey) -> Optional[Cell]:
        return self.cells.get(key)

    def offer(self, key: SubproblemKey, value: ExtendedCoord, back: Optional[BackRef]) -> bool:
        """Keep the strictly larger value; the first writer wins ties."""
        cur = self.cells.get(key)
        if cur is not None and not value > cur.value:
            return False
        self.cells[key] = Cell(value, back)
        return True

    def __len__(self):
        return len(self.cells)


def extract_gamma(
    table: SubproblemTable, n_star: int, k_star: int, l_star: int
) -> Optional[tuple[int, int]]:
    """Largest keep-count among completed strategies, with its flag."""
    for gamma in range(n_star, -1, -1):
        for flag in (FLAG_STRICT, FLAG_LOOSE):
            cell = table.get(SubproblemKey(n_star, k_star, l_star, gamma, flag))
            if cell is not None and cell.value is POS_INF:
                return gamma, flag
    return None


def reconstruct_points(
    table: SubproblemTable, V: VoterSet, k_star: int, l_star: int, gamma: int, flag: int
) -> tuple[ExtendedCoord, ...]:
    """Walk back refs from a completed cell; yields p_1 < ... < p_{k*}."""
    key = SubproblemKey(V.n_star, k_star, l_star, gamma, flag)
    cell = table.get(key)
    if cell is None or cell.value is not POS_INF:
        raise InternalError(f"no completed strategy at {key}")
    points = []
    while key.k > 0:
        br = cell.back
        if br is None:
            raise InternalError(f"missing back reference at {key}")
        kept_here = (key.n - br.n) - oplus(br.points, br.a, br.b)
        pred = SubproblemKey(br.n, key.k - 1, key.l - br.points, key.gamma - kept_here, br.flag)
        cell = table.get(pred)
        if cell is None or not is_finite(cell.value):
            raise InternalError(f"broken back reference {key} -> {pred}")
        points.append(cell.value)
        key = pred
    points.reverse()
    return tuple(points)
