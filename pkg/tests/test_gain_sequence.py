"""Gain sequences, canonical responses, realization, thresholds."""

import itertools
import random
from fractions import Fraction

import pytest

from voronoigame import (
    GainKind,
    SequenceRepresentation,
    ThresholdKind,
    VoterSet,
    canonical_response,
    classify_threshold,
    gain_sequence,
    payoff,
    realize_response,
    trivial_strategy,
)

from helpers import random_voterset

SIX = VoterSet.from_values([1, 4, 6, 13, 17, 23])


def test_gain_sequence_single_point():
    seq = gain_sequence(SIX, [6])
    assert seq.values == (3, 2, 0, 0)
    shape = [(e.kind, e.interval) for e in seq.entries]
    assert shape == [
        (GainKind.ALPHA, 1),
        (GainKind.ALPHA, 0),
        (GainKind.BETA, 0),
        (GainKind.BETA, 1),
    ]


def test_gain_sequence_two_points():
    assert gain_sequence(SIX, [6, 17]).values == (2, 1, 1, 0, 0, 0)


def test_gain_sequence_no_voters():
    assert gain_sequence(VoterSet(()), [5]).values == (0, 0, 0, 0)


def test_gain_sequence_tie_order_is_index_then_alpha_first():
    # equal values sort by interval index, alpha ahead of beta
    V = VoterSet.from_values([0, 1, 10, 11])
    seq = gain_sequence(V, [5])  # both half lines give alpha 2, beta 0
    assert [(e.value, e.interval, e.kind) for e in seq.entries] == [
        (2, 0, GainKind.ALPHA),
        (2, 1, GainKind.ALPHA),
        (0, 0, GainKind.BETA),
        (0, 1, GainKind.BETA),
    ]


def test_canonical_response_prefix():
    rep1, win1 = canonical_response(SIX, [6], 1)
    assert rep1.m == (0, 1) and win1 == 3
    rep2, win2 = canonical_response(SIX, [6], 2)
    assert rep2.m == (1, 1) and win2 == 5


def test_canonical_response_large_budget_takes_all():
    rep, win = canonical_response(SIX, [6], 99)
    assert rep.m == (2, 2) and win == 5  # voter at 6 sits on the leader point


def test_canonical_beats_sampled_followers():
    rng = random.Random(123)
    for _ in range(60):
        V = random_voterset(rng, rng.randint(2, 7), 0, 20)
        k = rng.randint(1, 3)
        P = sorted(rng.sample(range(-1, 22), k))
        l = rng.randint(1, 2 * k + 1)
        _, winnings = canonical_response(V, P, l)
        floor = V.n_star - winnings
        for _ in range(40):
            Q = [Fraction(rng.randint(-8, 88), rng.randint(1, 4)) for _ in range(l)]
            assert payoff(V, P, Q) >= floor


def test_realize_half_line_example():
    rep = SequenceRepresentation((0, 1))
    Q = realize_response(SIX, [6], rep)
    assert Q.points == (Fraction(18),)
    assert payoff(SIX, [6], Q) == 3


def test_realize_two_points_in_bounded_interval():
    V = VoterSet.from_values([1, 4])
    rep = SequenceRepresentation((0, 2, 0))
    Q = realize_response(V, [0, 10], rep)
    assert Q.points == (Fraction(1, 2), Fraction(19, 2))
    assert payoff(V, [0, 10], Q) == 0


def test_realize_empty_rep_is_empty_strategy():
    Q = realize_response(SIX, [6], SequenceRepresentation((0, 0)))
    assert Q.points == ()


def test_realize_matches_encoded_winnings_exhaustively():
    # every rep over every interval must land exactly on its encoded value
    rng = random.Random(99)
    for _ in range(40):
        V = random_voterset(rng, rng.randint(1, 7), 0, 18)
        k = rng.randint(1, 3)
        P = sorted(rng.sample(range(-1, 20), k))
        seq = gain_sequence(V, P)
        for m in itertools.product((0, 1, 2), repeat=k + 1):
            encoded = 0
            for i, mi in enumerate(m):
                if mi >= 1:
                    encoded += seq.pairs[i].alpha
                if mi == 2:
                    encoded += seq.pairs[i].beta
            Q = realize_response(V, P, SequenceRepresentation(m))
            assert payoff(V, P, Q) == V.n_star - encoded, (V.coords, P, m)


def test_classify_threshold_examples():
    seq = gain_sequence(SIX, [6])  # values (3, 2, 0, 0)
    assert classify_threshold(seq, 1, 3) is ThresholdKind.STRICT
    assert classify_threshold(seq, 1, 2) is ThresholdKind.LOOSE
    assert classify_threshold(seq, 0, 5) is ThresholdKind.STRICT  # tau_0 = +inf
    assert classify_threshold(seq, 1, 1) is ThresholdKind.INVALID
    assert classify_threshold(seq, 2, 0) is ThresholdKind.LOOSE


def test_threshold_partition_is_an_integer_interval():
    # valid l-thresholds form exactly the integers in [tau_{l+1}, tau_l]
    rng = random.Random(5)
    for _ in range(80):
        V = random_voterset(rng, rng.randint(1, 7), 0, 20, distinct=False)
        k = rng.randint(1, 3)
        P = sorted(rng.sample(range(0, 21), k))
        seq = gain_sequence(V, P)
        for l in range(0, 2 * k + 3):
            lower = seq.tau(l + 1)
            upper = seq.tau(l)
            for tau in range(0, V.n_star + 2):
                kind = classify_threshold(seq, l, tau)
                if tau == lower:
                    assert kind is ThresholdKind.LOOSE
                elif lower < tau <= upper:
                    assert kind is ThresholdKind.STRICT
                else:
                    assert kind is ThresholdKind.INVALID


def test_trivial_strategy_prefers_multiplicity_then_position():
    V = VoterSet.from_values([0, 0, 5])
    P, pay = trivial_strategy(V, 1, 2)
    assert P.points == (Fraction(0),) and pay == 2


def test_trivial_strategy_breaks_ties_leftward():
    V = VoterSet.from_values([0, 4, 10])
    P, pay = trivial_strategy(V, 1, 2)
    assert P.points == (Fraction(0),) and pay == 1


def test_trivial_strategy_covering_everything():
    P, pay = trivial_strategy(SIX, 6, 3)
    assert P.points == SIX.coords and pay == 6
