"""Game instances: a multiset of voters on the line plus point budgets.

Voters are kept as a sorted tuple of exact rationals.  Coordinates may
repeat (a multiset); the sweep solver additionally requires pairwise
distinct coordinates and checks that itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coords import Coord, parse_coord
from .errors import InvalidInstance


@dataclass(frozen=True)
class VoterSet:
    """Sorted multiset of voter coordinates.

    ``coords`` is non-decreasing.  Indexing follows the 1-based convention
    v_1 <= ... <= v_{n*} used throughout; ``value(i)`` returns v_i.
    """

    coords: tuple[Coord, ...]

    def __post_init__(self):
        if any(self.coords[i] > self.coords[i + 1] for i in range(len(self.coords) - 1)):
            raise InvalidInstance("voter coordinates must be sorted")

    @staticmethod
    def from_values(values: Iterable) -> "VoterSet":
        coords = tuple(sorted(parse_coord(v) for v in values))
        return VoterSet(coords)

    @property
    def n_star(self) -> int:
        return len(self.coords)

    def value(self, i: int) -> Coord:
        """1-based accessor: v_i for 1 <= i <= n*."""
        if not 1 <= i <= len(self.coords):
            raise IndexError(f"voter index {i} out of range 1..{len(self.coords)}")
        return self.coords[i - 1]

    def prefix(self, n: int) -> "VoterSet":
        """V_n, the n leftmost voters."""
        if not 0 <= n <= len(self.coords):
            raise IndexError(f"prefix length {n} out of range")
        return VoterSet(self.coords[:n])

    @property
    def distinct_count(self) -> int:
        return len(set(self.coords))

    @property
    def strictly_increasing(self) -> bool:
        return all(self.coords[i] < self.coords[i + 1] for i in range(len(self.coords) - 1))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class GameInstance:
    """A validated instance: voters plus the two point budgets.

    ``k_covers_all`` and ``l_surrounds`` flag the two regimes where the
    trivial leader strategy is already optimal (enough points to sit on
    every distinct voter, or a follower who can surround every leader
    point with two of her own).
    """

    voters: VoterSet
    k: int
    l: int
    k_covers_all: bool = field(init=False)
    l_surrounds: bool = field(init=False)

    def __post_init__(self):
        if self.voters.n_star == 0:
            raise InvalidInstance("instance needs at least one voter")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidInstance(f"leader budget k must be a positive int, got {self.k!r}")
        if not isinstance(self.l, int) or self.l < 1:
            raise InvalidInstance(f"follower budget l must be a positive int, got {self.l!r}")
        object.__setattr__(self, "k_covers_all", self.k >= self.voters.distinct_count)
        object.__setattr__(self, "l_surrounds", self.l >= 2 * self.k)


def normalize_instance(voters: Sequence, k: int, l: int) -> GameInstance:
    """Parse, sort, and validate an instance."""
    vs = voters if isinstance(voters, VoterSet) else VoterSet.from_values(voters)
    return GameInstance(voters=vs, k=k, l=l)
