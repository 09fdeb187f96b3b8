import json
import random
from itertools import combinations_with_replacement

import pytest

from oracles import all_sub_sums_int, all_sub_sums_mod
from zerosum import DomainError
from zerosum.subsums import theorem_hypotheses
from zerosum.sweeps import (
    SweepConfig,
    brute_force_int_subsums,
    dump_report,
    random_theorem_instance,
    run_sweep,
    zero_sum_free_sequences,
)


@pytest.mark.parametrize("n", range(2, 9))
def test_zero_sum_free_enumeration_complete(n):
    want = set()
    for length in range(1, n):
        for terms in combinations_with_replacement(range(1, n), length):
            if 0 not in all_sub_sums_mod(terms, n):
                want.add(terms)
    got = list(zero_sum_free_sequences(n, n - 1))
    assert got == sorted(got)
    assert set(got) == want and len(got) == len(want)


def test_bar_budget_prunes_exactly():
    n = 9
    full = [t for t in zero_sum_free_sequences(n, n) if sum(t) <= n - 1]
    assert list(zero_sum_free_sequences(n, n, max_bar=n - 1)) == full


def test_random_instances_meet_hypotheses():
    rng = random.Random(5)
    for _ in range(500):
        S, t = random_theorem_instance(rng, 30)
        assert theorem_hypotheses(S, S.n - S.length) == []
        assert 1 <= t <= sum(S.terms)


def test_brute_force_int_oracle_agrees_with_combinations():
    for weights in [(1,), (1, 1, 3), (2, 2, 5, 7), (4, 4, 4, 1)]:
        assert brute_force_int_subsums(weights) == all_sub_sums_int(weights, 100)


@pytest.mark.parametrize("suite", ["interval-theorem", "normalizer", "bounds", "classification", "davenport"])
def test_small_suites_clean(suite):
    report = run_sweep(suite, SweepConfig(max_n=6, samples=50), timing=False)
    assert report["counterexamples"] == []
    assert report["elapsed_ms"] is None


def test_report_schema():
    report = run_sweep("normalizer", SweepConfig(max_n=5))
    assert set(report) == {"suite", "config", "counts", "counterexamples", "elapsed_ms"}
    assert isinstance(report["elapsed_ms"], int)
    assert json.loads(dump_report(report)) == report


def test_parallel_matches_serial():
    cfg1 = SweepConfig(max_n=7, jobs=1, seed=3, samples=100)
    cfg2 = SweepConfig(max_n=7, jobs=2, seed=3, samples=100)
    for suite in ("interval-theorem", "classification"):
        a = dump_report(run_sweep(suite, cfg1, timing=False))
        b = dump_report(run_sweep(suite, cfg2, timing=False))
        assert a == b


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_sweep("nope", SweepConfig())


def test_config_validation():
    with pytest.raises(DomainError):
        SweepConfig(jobs=0)
    with pytest.raises(DomainError):
        SweepConfig(output_format="xml")
