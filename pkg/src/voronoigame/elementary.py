"""Base cells of the threshold dynamic program: no leader point yet.

A cell <n, 0, l, gamma, flag> says: the first leader point is pending at
position v_{n+1}, voters v_1 .. v_n sit in the unbounded region left of
it, and the follower has spent l points there keeping the leader's share
at gamma.  The region's gain sequence is just (n, 0) - one point grabs
everything, a second adds nothing - so only l in {0, 1} can occur and
the threshold flags collapse to simple comparisons between tau and n.
"""

from __future__ import annotations

from typing import Optional

from .coords import ExtendedCoord, POS_INF
from .delta import FLAG_LOOSE, FLAG_STRICT
from .instance import VoterSet


def elementary_valid(tau: int, n: int, l: int, gamma: int, flag: int) -> bool:
    if gamma < 0:
        return False
    if l == 0:
        # follower ignores the region; leader keeps all n voters
        if flag == FLAG_STRICT:
            return gamma <= n and tau > n
        return gamma <= n and tau == n
    if l == 1:
        # one follower point takes the whole region
        return flag == FLAG_STRICT and gamma == 0 and 1 <= tau <= n
    return False


def elementary_value(
    V: VoterSet, tau: int, n: int, l: int, gamma: int, flag: int
) -> Optional[ExtendedCoord]:
    """Pending position of the first leader point, or None if the cell
    is infeasible.  Pending means the point may still be slid right, so
    the stored position is the band end v_{n+1} (+inf past the last voter).
    """
    if not 0 <= n <= V.n_star:
        return None
    if not elementary_valid(tau, n, l, gamma, flag):
        return None
    return V.value(n + 1) if n < V.n_star else POS_INF


FLAGS = (FLAG_STRICT, FLAG_LOOSE)
