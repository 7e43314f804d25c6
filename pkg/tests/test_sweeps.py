"""Every randomized invariant suite runs clean at small sizes."""

import pytest

from gl3weights.sweeps import SUITES, run_suite, run_suite_parallel

SUITE_PRIMES = {
    "decompose": 7,
    "orbits": 7,
    "weights": 11,
    "tame": 11,
    "breuil": 17,
    "candidates": 17,
    "predicted": 11,
    "elimination": 29,
    "cycling": 29,
    "slopes": 7,
}


def test_every_suite_is_listed():
    assert set(SUITE_PRIMES) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_runs_clean(name):
    checks, failures = run_suite(name, SUITE_PRIMES[name], seed=2, count=12)
    assert failures == [], failures[:2]
    assert checks > 0


def test_suites_are_seed_deterministic():
    a = run_suite("weights", 11, seed=9, count=30)
    b = run_suite("weights", 11, seed=9, count=30)
    assert a == b


def test_parallel_matches_serial_totals():
    checks1, fails1 = run_suite_parallel("slopes", 7, 4, 24, jobs=1)
    checks2, fails2 = run_suite_parallel("slopes", 7, 4, 24, jobs=3)
    assert fails1 == fails2 == []
    # chunks use derived seeds, so totals agree even though draws differ
    assert checks1 > 0 and checks2 > 0


def test_exhaustive_suite_ignores_jobs():
    a = run_suite_parallel("decompose", 7, 0, 10, jobs=1)
    b = run_suite_parallel("decompose", 7, 0, 10, jobs=4)
    assert a == b
