"""Command-line front door: solve, best-response, gainmap, oracle, fuzz.

Instances travel as JSON files (see :mod:`.io`).  Exit codes: 0 success,
1 parse or usage error, 2 size or capability guard, 3 fuzz found a
counterexample.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from typing import Optional, Sequence

from .amap import build_a_map
from .coords import parse_coord
from .errors import (
    InternalError,
    InvalidGains,
    InvalidInstance,
    InvalidInterval,
    InvalidRepresentation,
    OracleTooLarge,
    RequiresDistinctVoters,
)
from .export import amap_to_csv, amap_to_svg
from .gains import canonical_response, realize_response
from .game import Strategy, payoff
from .io import coord_to_json, dumps_json, load_instance, result_to_json
from .oracle import adversary_check, oracle_gamma
from .solve import solve_game

_PARSE_ERRORS = (InvalidInstance, InvalidInterval, InvalidRepresentation, InvalidGains)
_GUARD_ERRORS = (OracleTooLarge, RequiresDistinctVoters)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit 2; keep 2 for guards only
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    result = solve_game(inst.voters, inst.k, inst.l, engine=args.engine, threads=args.threads)
    V = inst.voters
    rep, winnings = canonical_response(V, result.strategy, inst.l)
    witness = realize_response(V, result.strategy, rep)
    # the emitted certificate must check out before it leaves the process
    realized = V.n_star - payoff(V, result.strategy, witness)
    if realized != winnings or V.n_star - winnings != result.gamma:
        raise InternalError(
            f"certificate mismatch: gamma {result.gamma}, canonical {winnings}, "
            f"witness takes {realized}"
        )
    data = result_to_json(result, witness.points)
    _write_output(dumps_json(data), args.output)
    return 0


def _cmd_best_response(args) -> int:
    inst = load_instance(args.instance)
    try:
        points = tuple(sorted(parse_coord(tok) for tok in args.p.split(",") if tok.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInstance(f"bad --p value {args.p!r}") from exc
    if not points:
        raise InvalidInstance("--p needs at least one point")
    P = Strategy(points, "leader")
    V = inst.voters
    rep, winnings = canonical_response(V, P, inst.l)
    Q = realize_response(V, P, rep)
    data = {
        "p_strategy": [coord_to_json(p) for p in points],
        "l": inst.l,
        "winnings": winnings,
        "keep": V.n_star - winnings,
        "q_strategy": [coord_to_json(q) for q in Q.points],
    }
    _write_output(dumps_json(data), args.output)
    return 0


def _cmd_gainmap(args) -> int:
    inst = load_instance(args.instance)
    amap = build_a_map(inst.voters)
    text = amap_to_csv(amap) if args.emit == "csv" else amap_to_svg(amap)
    _write_output(text, args.output)
    return 0


def _cmd_oracle(args) -> int:
    inst = load_instance(args.instance)
    gamma, points = oracle_gamma(inst.voters, inst.k, inst.l)
    data = {
        "gamma": gamma,
        "wins_majority": 2 * gamma >= inst.voters.n_star,
        "p_strategy": [coord_to_json(p) for p in points],
    }
    _write_output(dumps_json(data), args.output)
    return 0


def _cmd_fuzz(args) -> int:
    rng = random.Random(args.seed)
    lo, hi = 0, 40
    for trial in range(args.trials):
        n = rng.randint(2, args.max_n)
        coords = sorted(rng.sample(range(lo, hi + 1), n))
        k = rng.randint(1, args.max_k)
        l = rng.randint(1, min(2 * k + 1, n))
        result = solve_game(coords, k, l, engine=args.engine)
        expected, _ = oracle_gamma(coords, k, l)
        bad = result.gamma != expected
        if not bad:
            counter = adversary_check(
                coords, result.points, l, result.gamma,
                trials=50, seed=rng.randrange(1 << 30),
            )
            bad = counter is not None
        if bad:
            reproducer = {"voters": coords, "k": k, "l": l}
            sys.stderr.write(
                f"counterexample at trial {trial}: solver {result.gamma}, "
                f"oracle {expected}\n"
            )
            sys.stdout.write(dumps_json(reproducer))
            return 3
    sys.stdout.write(f"{args.trials} fuzz trials passed (seed {args.seed})\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="voronoigame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance file, emit a result file")
    solve.add_argument("instance", help="instance JSON path")
    solve.add_argument("-o", "--output", default=None, help="result path (default stdout)")
    solve.add_argument("--engine", default="auto", choices=("auto", "fast", "reference"))
    solve.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    solve.set_defaults(func=_cmd_solve)

    br = sub.add_parser("best-response", help="canonical follower reply to a given P")
    br.add_argument("instance", help="instance JSON path (supplies voters and l)")
    br.add_argument("--p", required=True, help="comma-separated leader points")
    br.add_argument("-o", "--output", default=None)
    br.set_defaults(func=_cmd_best_response)

    gm = sub.add_parser("gainmap", help="export the interval gain boundary map")
    gm.add_argument("instance", help="instance JSON path")
    gm.add_argument("--emit", default="csv", choices=("csv", "svg"))
    gm.add_argument("-o", "--output", default=None)
    gm.set_defaults(func=_cmd_gainmap)

    orc = sub.add_parser("oracle", help="exhaustive small-instance solve (size-guarded)")
    orc.add_argument("instance", help="instance JSON path")
    orc.add_argument("-o", "--output", default=None)
    orc.set_defaults(func=_cmd_oracle)

    fz = sub.add_parser("fuzz", help="random instances, solver vs oracle")
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--trials", type=int, default=100)
    fz.add_argument("--max-n", type=int, default=6, dest="max_n")
    fz.add_argument("--max-k", type=int, default=3, dest="max_k")
    fz.add_argument("--engine", default="auto", choices=("auto", "fast", "reference"))
    fz.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _GUARD_ERRORS as exc:
        sys.stderr.write(f"voronoigame: {exc}\n")
        return 2
    except _PARSE_ERRORS as exc:
        sys.stderr.write(f"voronoigame: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
