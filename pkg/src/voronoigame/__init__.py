"""Exact solver for the one-round discrete Voronoi game on the line.

A leader places k points, a follower answers with l points, and each voter
joins the player owning the nearest point (ties to the leader).  This
package computes the leader's guaranteed voter count, an optimal leader
strategy, and a checkable certificate, exactly, in rational arithmetic.
"""

from .coords import Coord, ExtendedCoord, NEG_INF, POS_INF, is_finite, parse_coord
from .errors import (
    InternalError,
    InvalidGains,
    InvalidInstance,
    InvalidInterval,
    InvalidRepresentation,
    OracleTooLarge,
    RequiresDistinctVoters,
    SweepOrderViolation,
    VoronoiGameError,
)
from .game import GainPair, Strategy, interval_gains, min_distance, payoff
from .gains import (
    GainEntry,
    GainKind,
    GainSequence,
    SequenceRepresentation,
    ThresholdKind,
    canonical_response,
    classify_threshold,
    gain_sequence,
    realize_response,
    trivial_strategy,
)
from .instance import GameInstance, VoterSet, normalize_instance
from .amap import AMap, BoundaryPolyline, PolySegment, SegmentKind, b_gain_at, build_a_map
from .export import amap_to_csv, amap_to_svg
from .sweep import (
    SpanTuple,
    SweepState,
    span_all,
    span_reference,
    span_reference_table,
    spans_at,
    sweep_advance,
    sweep_state,
)
from .delta import FLAG_LOOSE, FLAG_STRICT, TransitionTriple, delta_triples, oplus
from .dptable import (
    BackRef,
    Cell,
    SubproblemKey,
    SubproblemTable,
    extract_gamma,
    reconstruct_points,
)
from .dpsweep import compute_solutions
from .dpfast import DenseTable, compute_solutions_fast, warm_up
from .elementary import elementary_valid, elementary_value
from .oracle import adversary_check, candidate_grid, oracle_gamma
from .solve import SolveResult, solve_game

__version__ = "0.1.0"

__all__ = [
    "Coord",
    "ExtendedCoord",
    "NEG_INF",
    "POS_INF",
    "is_finite",
    "parse_coord",
    "VoronoiGameError",
    "InvalidInstance",
    "InvalidInterval",
    "InvalidRepresentation",
    "InvalidGains",
    "RequiresDistinctVoters",
    "SweepOrderViolation",
    "OracleTooLarge",
    "InternalError",
    "GainPair",
    "Strategy",
    "interval_gains",
    "min_distance",
    "payoff",
    "GainEntry",
    "GainKind",
    "GainSequence",
    "SequenceRepresentation",
    "ThresholdKind",
    "canonical_response",
    "classify_threshold",
    "gain_sequence",
    "realize_response",
    "trivial_strategy",
    "GameInstance",
    "VoterSet",
    "normalize_instance",
    "AMap",
    "BoundaryPolyline",
    "PolySegment",
    "SegmentKind",
    "build_a_map",
    "b_gain_at",
    "amap_to_csv",
    "amap_to_svg",
    "SpanTuple",
    "SweepState",
    "sweep_state",
    "sweep_advance",
    "span_all",
    "spans_at",
    "span_reference",
    "span_reference_table",
    "FLAG_STRICT",
    "FLAG_LOOSE",
    "TransitionTriple",
    "delta_triples",
    "oplus",
    "elementary_valid",
    "elementary_value",
    "SubproblemKey",
    "BackRef",
    "Cell",
    "SubproblemTable",
    "extract_gamma",
    "reconstruct_points",
    "compute_solutions",
    "DenseTable",
    "compute_solutions_fast",
    "warm_up",
    "SolveResult",
    "solve_game",
    "adversary_check",
    "candidate_grid",
    "oracle_gamma",
]
