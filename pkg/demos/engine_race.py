"""Reference engine vs array engine: identical tables, very different speed.

Run:  python3 demos/engine_race.py
"""

import random
import time

from voronoigame import solve_game
from voronoigame.dpfast import compute_solutions_fast, warm_up
from voronoigame.dpsweep import compute_solutions
from voronoigame.instance import VoterSet


def identical(ref, fast) -> bool:
    keys = set(ref.cells)
    if keys != set(fast.keys()):
        return False
    return all(
        ref.get(key).value == fast.get(key).value and ref.get(key).back == fast.get(key).back
        for key in keys
    )


def main() -> None:
    warm_up()
    rng = random.Random(2024)

    V = VoterSet.from_values(sorted(rng.sample(range(0, 200), 18)))
    ref = compute_solutions(V, 3, 2, 2)
    fast = compute_solutions_fast(V, 3, 2, 2)
    print(f"n=18 table: {len(ref)} cells, engines identical: {identical(ref, fast)}\n")

    print(f"{'n':>5} {'reference':>10} {'array':>8}")
    for n in (20, 40, 80):
        coords = sorted(rng.sample(range(0, 12 * n), n))
        t0 = time.perf_counter()
        a = solve_game(coords, 4, 3, engine="reference")
        t_ref = time.perf_counter() - t0
        t0 = time.perf_counter()
        b = solve_game(coords, 4, 3, engine="fast")
        t_fast = time.perf_counter() - t0
        assert (a.gamma, a.points) == (b.gamma, b.points)
        print(f"{n:>5} {t_ref:>9.2f}s {t_fast:>7.2f}s   gamma={a.gamma}")

    coords = sorted(rng.sample(range(0, 2400), 200))
    t0 = time.perf_counter()
    res = solve_game(coords, 5, 5, engine="fast")
    print(f"\nn=200, k=l=5: gamma={res.gamma} in {time.perf_counter() - t0:.2f}s (array engine)")


if __name__ == "__main__":
    main()
