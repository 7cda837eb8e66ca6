"""Per-interval follower bookkeeping for the threshold dynamic program.

The solver guesses the value tau of the least valuable entry a canonical
follower still takes, then builds leader strategies interval by interval.
Inside one interval with gain pair (a, b) the follower places j in
{0, 1, 2} points: it must take every entry worth more than tau, may take
entries worth exactly tau, and never takes less.  A single bit of state
makes the "may" globally consistent: once one tau-valued entry has been
passed over, all later tau-valued entries must be passed over too, since
a greedy responder drops ties only when its budget is already exhausted.

Flags: STRICT means no tau-valued entry was skipped so far, LOOSE means
at least one was.  A finished strategy classified STRICT satisfies
tau_l >= tau > tau_{l+1}; a LOOSE one satisfies tau = tau_{l+1}.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InvalidGains

FLAG_STRICT = 0
FLAG_LOOSE = 1


class TransitionTriple(NamedTuple):
    flag_in: int
    points: int  # follower points spent in this interval
    flag_out: int


_S, _L = FLAG_STRICT, FLAG_LOOSE

# keyed by (sign(a - tau), sign(b - tau)), signs clipped to {-1, 0, 1}
_TABLE: dict[tuple[int, int], tuple[TransitionTriple, ...]] = {
    (1, 1): (
        TransitionTriple(_L, 2, _L),
        TransitionTriple(_S, 2, _S),
    ),
    (1, 0): (
        TransitionTriple(_L, 1, _L),
        TransitionTriple(_S, 1, _L),
        TransitionTriple(_S, 2, _S),
    ),
    (1, -1): (
        TransitionTriple(_L, 1, _L),
        TransitionTriple(_S, 1, _S),
    ),
    (0, 0): (
        TransitionTriple(_L, 0, _L),
        TransitionTriple(_S, 0, _L),
        TransitionTriple(_S, 1, _L),
        TransitionTriple(_S, 2, _S),
    ),
    (0, -1): (
        TransitionTriple(_L, 0, _L),
        TransitionTriple(_S, 0, _L),
        TransitionTriple(_S, 1, _S),
    ),
    (-1, -1): (
        TransitionTriple(_L, 0, _L),
        TransitionTriple(_S, 0, _S),
    ),
}


def delta_triples(tau: int, a: int, b: int) -> tuple[TransitionTriple, ...]:
    """Admissible (flag_in, points, flag_out) moves for one interval."""
    if tau < 1:
        raise InvalidGains(f"threshold must be positive, got {tau}")
    if not 0 <= b <= a:
        raise InvalidGains(f"gain pair out of order: a={a}, b={b}")
    sa = (a > tau) - (a < tau)
    sb = (b > tau) - (b < tau)
    return _TABLE[sa, sb]


def oplus(j: int, a: int, b: int) -> int:
    """Voters captured by j follower points given interval gains (a, b)."""
    if j == 0:
        return 0
    if j == 1:
        return a
    if j == 2:
        return a + b
    raise InvalidGains(f"a follower places 0, 1 or 2 points per interval, got {j}")
