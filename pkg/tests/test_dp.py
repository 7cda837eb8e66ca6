"""Transition table, base cells, and the reference engine."""

import random
from fractions import Fraction as F

import pytest

from voronoigame import (
    FLAG_LOOSE,
    FLAG_STRICT,
    GainEntry,
    GainKind,
    GainPair,
    GainSequence,
    InvalidGains,
    POS_INF,
    RequiresDistinctVoters,
    SubproblemKey,
    ThresholdKind,
    TransitionTriple,
    VoterSet,
    canonical_response,
    classify_threshold,
    compute_solutions,
    delta_triples,
    elementary_valid,
    elementary_value,
    extract_gamma,
    oplus,
    payoff,
    realize_response,
    reconstruct_points,
    solve_game,
)

from helpers import random_voterset

S, L = FLAG_STRICT, FLAG_LOOSE
SIX = VoterSet.from_values([1, 4, 6, 13, 17, 23])


def triples(tau, a, b):
    return set(delta_triples(tau, a, b))


def test_delta_table_all_six_cases():
    # fix tau=5 and pick gains landing in each sign case
    assert triples(5, 9, 7) == {(L, 2, L), (S, 2, S)}
    assert triples(5, 9, 5) == {(L, 1, L), (S, 1, L), (S, 2, S)}
    assert triples(5, 9, 2) == {(L, 1, L), (S, 1, S)}
    assert triples(5, 5, 5) == {(L, 0, L), (S, 0, L), (S, 1, L), (S, 2, S)}
    assert triples(5, 5, 2) == {(L, 0, L), (S, 0, L), (S, 1, S)}
    assert triples(5, 2, 1) == {(L, 0, L), (S, 0, S)}


def test_delta_rejects_bad_input():
    with pytest.raises(InvalidGains):
        delta_triples(0, 1, 1)
    with pytest.raises(InvalidGains):
        delta_triples(3, 1, 2)  # beta above alpha
    with pytest.raises(InvalidGains):
        delta_triples(3, -1, -2)
    with pytest.raises(InvalidGains):
        oplus(3, 1, 1)


def test_delta_shape_properties():
    for tau in (1, 2, 7):
        for a in range(0, 10):
            for b in range(0, a + 1):
                moves = delta_triples(tau, a, b)
                # once loose always loose, and never tighter than the source
                assert all(m.flag_out == L for m in moves if m.flag_in == L)
                # every entry above tau is forced
                forced = (a > tau) + (b > tau)
                assert all(m.points >= forced for m in moves)
                # both flags always have at least one admissible move
                assert {m.flag_in for m in moves} == {S, L}


def test_oplus():
    assert oplus(0, 4, 2) == 0
    assert oplus(1, 4, 2) == 4
    assert oplus(2, 4, 2) == 6


def two_entry_sequence(n):
    return GainSequence(
        entries=(GainEntry(n, 0, GainKind.ALPHA), GainEntry(0, 0, GainKind.BETA)),
        pairs=(GainPair(n, 0),),
    )


def test_elementary_frozen():
    V = VoterSet.from_values([0, 10])
    assert elementary_value(V, 1, 0, 0, 0, S) == 0
    assert elementary_value(V, 1, 0, 0, 0, L) is None  # loose needs tau == n
    assert elementary_value(V, 1, 1, 0, 0, L) == 10
    assert elementary_value(V, 1, 1, 0, 1, L) == 10
    assert elementary_value(V, 1, 1, 0, 0, S) is None  # strict needs tau > n
    assert elementary_value(V, 2, 1, 0, 1, S) == 10
    assert elementary_value(V, 1, 1, 1, 0, S) == 10  # one point sweeps the region
    assert elementary_value(V, 1, 1, 1, 1, S) is None  # nothing left to keep
    assert elementary_value(V, 1, 2, 1, 0, S) is POS_INF  # past the last voter
    assert elementary_value(V, 1, 1, 2, 0, S) is None  # second point is wasted
    assert elementary_value(V, 1, 3, 0, 0, S) is None  # n beyond the instance


def test_elementary_matches_threshold_classifier():
    # the base region's sequence is (n, 0); validity must agree with the
    # general classifier plus the keep-count bound
    kinds = {S: ThresholdKind.STRICT, L: ThresholdKind.LOOSE}
    for n in range(0, 6):
        seq = two_entry_sequence(n)
        for l in (0, 1, 2):
            keep = n if l == 0 else 0
            for tau in range(1, 8):
                for flag in (S, L):
                    expect = (
                        classify_threshold(seq, l, tau) == kinds[flag]
                        and keep >= 0
                    )
                    for gamma in range(0, n + 1):
                        got = elementary_valid(tau, n, l, gamma, flag)
                        assert got == (expect and gamma <= keep)


def test_reference_engine_hand_trace():
    # V = {0, 10}, k = l = tau = 1
    V = VoterSet.from_values([0, 10])
    table = compute_solutions(V, 1, 1, 1)

    assert table.get(SubproblemKey(0, 0, 0, 0, S)).value == 0
    assert table.get(SubproblemKey(1, 0, 1, 0, S)).value == 10
    assert table.get(SubproblemKey(1, 1, 0, 1, S)).value == 10
    terminal = table.get(SubproblemKey(2, 1, 1, 1, S))
    assert terminal.value is POS_INF
    # first writer: the base cell firing at x=0 with the half-line span
    assert terminal.back == (0, 1, 0, 1, S)
    # keeping both voters without spending the follower budget is loose-only
    assert table.get(SubproblemKey(2, 1, 0, 2, L)).value is POS_INF

    assert extract_gamma(table, 2, 1, 1) == (1, S)
    assert reconstruct_points(table, V, 1, 1, 1, S) == (0,)


def test_reference_engine_tau_too_big():
    V = VoterSet.from_values([0, 10])
    table = compute_solutions(V, 1, 1, 2)
    assert extract_gamma(table, 2, 1, 1) is None


def test_solve_pair():
    res = solve_game([0, 10], 1, 1, engine="reference")
    assert res.gamma == 1
    assert res.per_tau == (1, None)
    assert res.tau is None  # the fallback ties the best run and is preferred
    assert res.points == (0,)
    assert res.wins_majority


def test_solve_six_named_values():
    res = solve_game([1, 4, 6, 13, 17, 23], 2, 1, engine="reference")
    assert res.gamma == 5
    assert res.wins_majority
    # the strategy must certify the value, not just claim it
    rep, winnings = canonical_response(SIX, res.strategy, 1)
    assert SIX.n_star - winnings == 5
    q = realize_response(SIX, res.strategy, rep)
    assert payoff(SIX, res.strategy, q) == 5

    for l in (1, 2, 3, 5, 12):
        res = solve_game([1, 4, 6, 13, 17, 23], 6, l)
        assert res.gamma == 6
        assert res.engine == "trivial"
        assert res.points == (1, 4, 6, 13, 17, 23)


def test_solve_surround_regime():
    res = solve_game([0, 4, 10], 1, 2)
    assert res.gamma == 1
    assert res.engine == "trivial"
    assert res.tau is None


def test_solve_rejects_duplicates_in_dp_regime():
    with pytest.raises(RequiresDistinctVoters):
        solve_game([0, 0, 5], 1, 1)
    # but duplicate voters are fine when a trivial regime applies
    res = solve_game([0, 0, 5], 2, 1)
    assert res.gamma == 3
    res = solve_game([0, 0, 5], 1, 2)
    assert res.gamma == 2  # sit on the doubled voter


def test_solve_rational_voters():
    res = solve_game([F(1, 2), F(7, 3), F(5)], 1, 1, engine="reference")
    assert res.gamma >= 1
    rep, winnings = canonical_response(res.instance.voters, res.strategy, 1)
    assert 3 - winnings == res.gamma


def test_solve_deterministic():
    rng = random.Random(4401)
    for _ in range(10):
        n = rng.randint(2, 6)
        Vs = random_voterset(rng, n, 0, 25, distinct=True)
        k = rng.randint(1, 3)
        l = rng.randint(1, max(1, min(2 * k - 1, n)))
        a = solve_game(Vs.coords, k, l, engine="reference")
        b = solve_game(Vs.coords, k, l, engine="reference")
        assert (a.gamma, a.points, a.tau, a.per_tau) == (b.gamma, b.points, b.tau, b.per_tau)


def test_solve_certificates_random():
    rng = random.Random(4402)
    for _ in range(25):
        n = rng.randint(2, 6)
        Vs = random_voterset(rng, n, 0, 30, distinct=True)
        k = rng.randint(1, 3)
        l = rng.randint(1, min(2 * k + 1, n))
        res = solve_game(Vs.coords, k, l, engine="reference")
        rep, winnings = canonical_response(Vs, res.strategy, l)
        assert Vs.n_star - winnings == res.gamma
        q = realize_response(Vs, res.strategy, rep)
        assert payoff(Vs, res.strategy, q) == res.gamma
        for g in res.per_tau:
            if g is not None:
                assert 0 <= g <= res.gamma
