"""Array engine must reproduce the reference engine bit for bit."""

import random
from fractions import Fraction

import pytest

from voronoigame import solve_game
from voronoigame.dpfast import DenseTable, compute_solutions_fast, warm_up
from voronoigame.dpsweep import compute_solutions
from voronoigame.dptable import SubproblemKey
from voronoigame.errors import RequiresDistinctVoters
from voronoigame.instance import VoterSet

from helpers import random_voterset


@pytest.fixture(scope="module", autouse=True)
def _compiled():
    warm_up()


def _assert_tables_identical(ref, fast, ctx):
    ref_keys = set(ref.cells)
    fast_keys = set(fast.keys())
    assert ref_keys == fast_keys, (ctx, sorted(ref_keys ^ fast_keys)[:5])
    for key in ref_keys:
        a = ref.get(key)
        b = fast.get(key)
        assert a.value == b.value, (ctx, key, a.value, b.value)
        assert a.back == b.back, (ctx, key, a.back, b.back)


def test_tables_identical_random():
    rng = random.Random(1203)
    for _ in range(120):
        V = random_voterset(rng, rng.randint(2, 9), -25, 45, distinct=True)
        k = rng.randint(1, 4)
        l = rng.randint(1, min(2 * k + 1, V.n_star))
        tau = rng.randint(1, max(1, V.n_star // l))
        ref = compute_solutions(V, k, l, tau)
        fast = compute_solutions_fast(V, k, l, tau)
        _assert_tables_identical(ref, fast, (tuple(V), k, l, tau))


def test_tables_identical_rational_voters():
    V = VoterSet.from_values([Fraction(1, 2), Fraction(7, 3), 5, Fraction(23, 4)])
    ref = compute_solutions(V, 2, 1, 2)
    fast = compute_solutions_fast(V, 2, 1, 2)
    _assert_tables_identical(ref, fast, "rational")


def test_solve_results_identical():
    rng = random.Random(88)
    for _ in range(30):
        V = random_voterset(rng, rng.randint(3, 14), -40, 80, distinct=True)
        k = rng.randint(1, 4)
        l = rng.randint(1, min(2 * k + 1, V.n_star))
        a = solve_game(V, k, l, engine="reference")
        b = solve_game(V, k, l, engine="fast")
        assert (a.gamma, a.tau, a.per_tau, a.points) == (b.gamma, b.tau, b.per_tau, b.points)


def test_replay_is_deterministic():
    V = VoterSet.from_values([3, 8, 11, 19, 26, 40, 41, 57])
    first = compute_solutions_fast(V, 3, 2, 2)
    second = compute_solutions_fast(V, 3, 2, 2)
    _assert_tables_identical_dense(first, second)


def _assert_tables_identical_dense(a: DenseTable, b: DenseTable):
    ka, kb = set(a.keys()), set(b.keys())
    assert ka == kb
    for key in ka:
        ca, cb = a.get(key), b.get(key)
        assert ca.value == cb.value and ca.back == cb.back


def test_dense_table_lookup_bounds():
    V = VoterSet.from_values([0, 10])
    table = compute_solutions_fast(V, 1, 1, 1)
    assert table.get(SubproblemKey(0, 0, 0, 0, 0)).value == 0
    assert table.get(SubproblemKey(9, 0, 0, 0, 0)) is None
    assert table.get(SubproblemKey(0, 5, 0, 0, 0)) is None
    assert table.get(SubproblemKey(0, 0, 0, 0, 3)) is None
    assert len(table) == len(set(table.keys()))


def test_duplicate_voters_rejected():
    with pytest.raises(RequiresDistinctVoters):
        compute_solutions_fast(VoterSet.from_values([0, 0, 5]), 1, 1, 1)


def test_moderate_instance_runs_quickly():
    rng = random.Random(5)
    coords = sorted(rng.sample(range(0, 500), 50))
    res = solve_game(coords, 5, 5, engine="fast")
    assert res.gamma >= res.instance.voters.n_star // (5 + 1)
    assert res.engine == "fast"
