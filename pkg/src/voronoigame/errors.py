"""Exception types raised by the public API."""


class VoronoiGameError(Exception):
    """Base class for all library errors."""


class InvalidInstance(VoronoiGameError):
    """Voter set or budgets violate the input contract."""


class InvalidInterval(VoronoiGameError):
    """Interval endpoints are not ordered x < y."""


class InvalidRepresentation(VoronoiGameError):
    """A follower-response representation does not fit the leader strategy."""


class InvalidGains(VoronoiGameError):
    """A gain pair violates alpha >= beta >= 0."""


class RequiresDistinctVoters(VoronoiGameError):
    """The sweep solver needs pairwise distinct voter coordinates."""


class SweepOrderViolation(VoronoiGameError):
    """A sweep event arrived left of the current sweep position."""


class OracleTooLarge(VoronoiGameError):
    """Instance exceeds the brute-force oracle size guard."""


class InternalError(VoronoiGameError):
    """Solver invariant broke; indicates a bug, not bad input."""
