"""Top-level solver: regime gates, threshold runs, reconstruction.

Γ(V, k, l) is the number of voters the leader keeps against a best
follower reply.  Two regimes need no search: with k points for every
distinct coordinate the leader keeps everything, and with l >= 2k the
follower can flank each leader point, so sitting on the most popular
spots is optimal.  Everything else runs the threshold dynamic program
once per candidate threshold tau = 1 .. floor(n*/l): a follower reply
whose cheapest taken entry is worth tau steals at least tau*l voters,
so larger thresholds cannot occur.  The best keep-count over all runs
and the trivial fallback is exact; ties prefer the fallback, then the
smallest threshold, keeping results deterministic.

Coordinates are scaled to integers up front (engines assume it) and
results are scaled back, so voters may be arbitrary rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .coords import Coord
from .dptable import SubproblemTable, extract_gamma, reconstruct_points
from .errors import InternalError, InvalidInstance, RequiresDistinctVoters
from .gains import canonical_response, trivial_strategy
from .game import Strategy
from .instance import GameInstance, VoterSet, normalize_instance


@dataclass(frozen=True)
class SolveResult:
    instance: GameInstance
    gamma: int
    points: tuple[Coord, ...]
    tau: Optional[int]  # winning threshold run; None when the fallback won
    per_tau: tuple[Optional[int], ...]  # keep-count per tau, index tau-1
    engine: str

    @property
    def wins_majority(self) -> bool:
        return 2 * self.gamma >= self.instance.voters.n_star

    @property
    def strategy(self) -> Strategy:
        return Strategy(self.points, "leader")


def _scale(V: VoterSet) -> tuple[VoterSet, int]:
    denom = math.lcm(*(c.denominator for c in V.coords))
    if denom == 1:
        return V, 1
    return VoterSet.from_values([c * denom for c in V.coords]), denom


def _run_engine(engine: str, V: VoterSet, k: int, l: int, tau: int) -> SubproblemTable:
    if engine == "reference":
        from .dpsweep import compute_solutions

        return compute_solutions(V, k, l, tau)
    if engine == "fast":
        from .dpfast import compute_solutions_fast

        return compute_solutions_fast(V, k, l, tau)
    raise InvalidInstance(f"unknown engine {engine!r}")


def _pick_engine(engine: str) -> str:
    if engine == "auto":
        try:
            import numba  # noqa: F401

            return "fast"
        except ImportError:
            return "reference"
    if engine not in ("reference", "fast"):
        raise InvalidInstance(f"unknown engine {engine!r}")
    return engine


def solve_game(
    voters: Sequence,
    k: int,
    l: int,
    engine: str = "auto",
    threads: int = 1,
) -> SolveResult:
    """Exact leader value, an optimal strategy, and per-threshold detail."""
    if threads < 1:
        raise InvalidInstance(f"thread count {threads} must be positive")
    inst = normalize_instance(voters, k, l)
    V = inst.voters
    n_star = V.n_star

    fallback, fallback_keep = trivial_strategy(V, k, l)
    if inst.k_covers_all or inst.l_surrounds:
        return SolveResult(
            instance=inst,
            gamma=fallback_keep,
            points=fallback.points,
            tau=None,
            per_tau=(),
            engine="trivial",
        )

    if not V.strictly_increasing:
        raise RequiresDistinctVoters(
            "repeated voter coordinates are only supported when k covers "
            "all distinct positions or l >= 2k"
        )

    engine = _pick_engine(engine)
    scaled, denom = _scale(V)

    per_tau: list[Optional[int]] = []
    best_tau: Optional[int] = None
    best_keep = -1
    best: Optional[tuple[SubproblemTable, int, int]] = None  # table, gamma, flag
    for tau in range(1, n_star // l + 1):
        table = _run_engine(engine, scaled, k, l, tau)
        found = extract_gamma(table, n_star, k, l)
        per_tau.append(found[0] if found else None)
        if found and found[0] > best_keep:
            best_keep = found[0]
            best_tau = tau
            best = (table, found[0], found[1])

    if best is None or fallback_keep >= best_keep:
        return SolveResult(
            instance=inst,
            gamma=fallback_keep,
            points=fallback.points,
            tau=None,
            per_tau=tuple(per_tau),
            engine=engine,
        )

    table, gamma, flag = best
    points = tuple(
        Fraction(p, denom) for p in reconstruct_points(table, scaled, k, l, gamma, flag)
    )
    _, winnings = canonical_response(V, Strategy(points, "leader"), l)
    if n_star - winnings != gamma:
        raise InternalError(
            f"reconstructed strategy keeps {n_star - winnings}, table says {gamma}"
        )
    return SolveResult(
        instance=inst,
        gamma=gamma,
        points=points,
        tau=best_tau,
        per_tau=tuple(per_tau),
        engine=engine,
    )
