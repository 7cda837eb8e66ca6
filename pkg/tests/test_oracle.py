"""Grid oracle behaviour and the oracle-vs-solver differential."""

import random
from fractions import Fraction as F

import pytest

from voronoigame import (
    InvalidInstance,
    OracleTooLarge,
    Strategy,
    VoterSet,
    adversary_check,
    canonical_response,
    oracle_gamma,
    payoff,
    realize_response,
    solve_game,
)

from helpers import random_voterset


def test_oracle_frozen_pair():
    gamma, points = oracle_gamma([0, 10], 1, 1)
    assert gamma == 1
    assert points == (0,)


def test_oracle_named_values():
    gamma, points = oracle_gamma([1, 4, 6, 13, 17, 23], 2, 1)
    assert gamma == 5
    V = VoterSet.from_values([1, 4, 6, 13, 17, 23])
    rep, winnings = canonical_response(V, Strategy(points, "leader"), 1)
    assert 6 - winnings == 5
    q = realize_response(V, Strategy(points, "leader"), rep)
    assert payoff(V, Strategy(points, "leader"), q) == 5

    assert oracle_gamma([0, 4, 10], 1, 2)[0] == 1


def test_oracle_guards():
    with pytest.raises(OracleTooLarge):
        oracle_gamma(list(range(8)), 1, 1)
    with pytest.raises(OracleTooLarge):
        oracle_gamma([0, 5, 9], 4, 1)
    with pytest.raises(InvalidInstance):
        oracle_gamma([0, F(1, 2), 5], 1, 1)


def test_oracle_multiset():
    assert oracle_gamma([0, 0, 5], 1, 2)[0] == 2
    assert oracle_gamma([0, 0, 5], 2, 1)[0] == 3
    assert oracle_gamma([3, 3, 3], 1, 3)[0] == 3


def test_adversary_check_accepts_true_value():
    gamma, points = oracle_gamma([1, 4, 6, 13, 17, 23], 2, 1)
    assert adversary_check([1, 4, 6, 13, 17, 23], points, 1, gamma, trials=400) is None


def test_adversary_check_refutes_inflated_claim():
    counter = adversary_check([0, 10], (0,), 1, 2, trials=400)
    assert counter is not None
    assert payoff(VoterSet.from_values([0, 10]), Strategy((0,), "leader"),
                  Strategy(counter, "follower")) < 2


def test_adversary_check_multi_point_follower():
    # replies with l >= 2 must come out sorted, not raise
    gamma, points = oracle_gamma([3, 14, 25, 36, 37, 40], 1, 3)
    assert adversary_check([3, 14, 25, 36, 37, 40], points, 3, gamma, trials=200) is None
    counter = adversary_check([3, 14, 25, 36, 37, 40], points, 3, gamma + 1, trials=200)
    assert counter is not None


def test_oracle_matches_reference_solver():
    rng = random.Random(5501)
    for _ in range(60):
        n = rng.randint(2, 5)
        Vs = random_voterset(rng, n, 0, 20, distinct=True)
        k = rng.randint(1, 3)
        l = rng.randint(1, min(2 * k + 1, n))
        want, _ = oracle_gamma(Vs.coords, k, l)
        got = solve_game(Vs.coords, k, l, engine="reference")
        assert got.gamma == want, (Vs.coords, k, l, want, got.gamma)
