"""End-to-end tour on a six-voter instance.

Run:  python3 demos/walkthrough.py
"""

from voronoigame import (
    Strategy,
    VoterSet,
    build_a_map,
    canonical_response,
    payoff,
    realize_response,
    solve_game,
    spans_at,
)
from voronoigame.oracle import adversary_check, oracle_gamma

VOTERS = [1, 4, 6, 13, 17, 23]
K, L = 2, 1


def main() -> None:
    V = VoterSet.from_values(VOTERS)
    print(f"voters {VOTERS}, leader places {K}, follower answers with {L}\n")

    amap = build_a_map(V)
    print(f"boundary map: {amap.segment_count} segments across {len(amap.polylines)} levels")
    print("spans to the right of x0 = 0 (voters left, alpha, beta, right end):")
    for span in spans_at(V, 0):
        print(f"  {span}")

    result = solve_game(VOTERS, K, L)
    print(f"\nsolved: keeps {result.gamma} of {V.n_star} voters"
          f" (majority: {result.wins_majority})")
    print(f"leader points: {[str(p) for p in result.points]}")
    print(f"per-threshold keep counts: {result.per_tau}, winner tau={result.tau}")

    P = Strategy(result.points, "leader")
    rep, winnings = canonical_response(V, P, L)
    Q = realize_response(V, P, rep)
    print(f"\nbest follower reply takes {winnings}: Q = {[str(q) for q in Q.points]}")
    print(f"payoff check: leader wins {payoff(V, P, Q)} == {result.gamma}")

    counter = adversary_check(VOTERS, result.points, L, result.gamma, trials=2000, seed=0)
    print(f"2000 random replies beat the certificate: {counter is not None}")

    exhaustive, _ = oracle_gamma(VOTERS, K, L)
    print(f"exhaustive grid search agrees: {exhaustive} == {result.gamma}")


if __name__ == "__main__":
    main()
