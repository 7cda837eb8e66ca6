"""JSON instance and result files, exact round-trip.

Rationals are serialized as ``"num/den"`` strings (plain integers stay
JSON integers) so nothing ever passes through floating point.  An
instance file is ``{"voters": [...], "k": int, "l": int}``; a result
file carries the solved value, one optimal leader strategy, an explicit
best follower reply, and the per-threshold detail.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .coords import Coord, parse_coord
from .errors import InvalidInstance
from .instance import GameInstance, normalize_instance
from .solve import SolveResult


def coord_to_json(c: Coord) -> Any:
    """Integers stay ints; anything else becomes ``"num/den"``."""
    c = Fraction(c)
    if c.denominator == 1:
        return int(c)
    return f"{c.numerator}/{c.denominator}"


def coord_from_json(value: Any) -> Coord:
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInstance(f"coordinate {value!r} must be an int or 'num/den' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_coord(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInstance(f"bad rational literal {value!r}") from exc
    raise InvalidInstance(f"coordinate {value!r} must be an int or 'num/den' string")


def instance_to_json(inst: GameInstance) -> dict:
    return {
        "voters": [coord_to_json(c) for c in inst.voters],
        "k": inst.k,
        "l": inst.l,
    }


def instance_from_json(data: Any) -> GameInstance:
    if not isinstance(data, dict):
        raise InvalidInstance("instance file must be a JSON object")
    missing = {"voters", "k", "l"} - set(data)
    if missing:
        raise InvalidInstance(f"instance file missing fields: {sorted(missing)}")
    voters = data["voters"]
    if not isinstance(voters, list):
        raise InvalidInstance("'voters' must be a list")
    k, l = data["k"], data["l"]
    if isinstance(k, bool) or isinstance(l, bool) or not isinstance(k, int) or not isinstance(l, int):
        raise InvalidInstance("'k' and 'l' must be integers")
    return normalize_instance([coord_from_json(v) for v in voters], k, l)


def result_to_json(result: SolveResult, witness_q: Sequence[Coord]) -> dict:
    return {
        "gamma": result.gamma,
        "wins_majority": result.wins_majority,
        "p_strategy": [coord_to_json(p) for p in result.points],
        "witness_q": [coord_to_json(q) for q in witness_q],
        "per_tau": [t for t in result.per_tau],
        "method": "trivial" if result.engine == "trivial" else "dp",
    }


def loads_instance(text: str) -> GameInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance(f"not valid JSON: {exc}") from exc
    return instance_from_json(data)


def load_instance(path: str) -> GameInstance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInstance(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def dumps_instance(inst: GameInstance) -> str:
    return json.dumps(instance_to_json(inst), indent=2) + "\n"


def dumps_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"
