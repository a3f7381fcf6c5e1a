from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vincular.errors import EnumerationCapError, UnsatisfiableQueryError
from vincular.oracle import (CACHE, ClassCache, count, count_by_rank_states, count_class,
                             distribution, joint_weight_sum, list_class, query)
from vincular.pattern import TYPE_21, k_pattern

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_count_examples():
    assert count(["12-3"], [("13-2", 0)], 4) == 8
    assert count(["12-3", "13-2", "21-3"], (), 5) == 8
    assert count(["12-3"], (), 4) == 15
    assert count(["12-3"], (), 0) == 1


def test_bell_numbers():
    assert [count(["12-3"], (), n) for n in range(9)] == BELL


def test_distribution_examples():
    assert distribution(["12-3"], "13-2", 3) == {0: 4, 1: 1}
    assert distribution(["12-3"], "13-2", 0) == {0: 1}
    assert distribution(["21-3"], "23-1", 5)[1] == 12


def test_list_examples():
    assert list_class(query(["12-3"], (), 3)) == [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    assert list_class(query(["12-3", "21-3"], (), 2)) == [(1, 2), (2, 1)]
    assert list_class(query(["12-3"], [("13-2", 1)], 3)) == [(1, 3, 2)]


def test_joint_weight_examples():
    assert joint_weight_sum(2, 1, 1, 1, 1) == 2
    assert joint_weight_sum(2, 2, 3, 1, 1) == 10
    assert joint_weight_sum(0, 5, 7, 2, 3) == 1
    assert joint_weight_sum(5, 1, 1, 1, 1) == 120
    assert isinstance(joint_weight_sum(3, Fraction(1, 2), 1, 1, 1), Fraction)


def test_unsatisfiable():
    with pytest.raises(UnsatisfiableQueryError):
        count(["12-3"], [("12-3", 1)], 4)
    # r = 0 is the same as avoiding, so it is allowed
    assert count(["12-3"], [("12-3", 0)], 4) == 15


def test_cap_error(monkeypatch):
    monkeypatch.setenv("VINCULAR_MAX_N", "5")
    with pytest.raises(EnumerationCapError):
        count(["12-3"], (), 6)


def test_negative_r_rejected():
    with pytest.raises(ValueError):
        query(["12-3"], [("13-2", -1)], 3)


@pytest.mark.parametrize("n", range(8))
def test_prefix_equals_filter(n):
    for avoid, contain in [(["12-3"], [("13-2", 1)]), (["21-3"], [("32-1", 2)]),
                           (["13-2", "2-31"], ()), (["12-3", "321-4"], ())]:
        q = query(avoid, contain, n)
        assert list_class(q) == list_class(q, method="filter")


@pytest.mark.parametrize("n", range(2, 8))
def test_parallel_equals_sequential(n):
    q = query(["12-3"], [("23-1", 1)], n)
    assert list_class(q, workers=2) == list_class(q)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPE_21), st.sampled_from(TYPE_21), st.integers(0, 3), st.integers(0, 7))
def test_rank_state_counter_matches_enumeration(cls, tau, r, n):
    if cls == tau and r:
        return
    assert count_by_rank_states([cls], [(tau, r)], n) == count([cls], [(tau, r)], n)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 7))
def test_rank_state_counter_two_statistics(r, s, n):
    assert count_by_rank_states((), [("12-3", r), ("13-2", s)], n) == count((), [("12-3", r), ("13-2", s)], n)


@pytest.mark.parametrize("tau", TYPE_21)
@pytest.mark.parametrize("n", range(7))
def test_distribution_sums_to_class_size(tau, n):
    assert sum(distribution(["12-3"], tau, n).values()) == BELL[n]


@pytest.mark.parametrize("k", (3, 4))
@pytest.mark.parametrize("n", range(9))
def test_dash_and_nodash_avoiders_coincide(k, n):
    dash = list_class(query(["12-3", k_pattern("dash", k)], (), n))
    nodash = list_class(query(["12-3", k_pattern("nodash", k)], (), n))
    assert set(dash) == set(nodash)


def test_cache_eviction_and_hits():
    cache = ClassCache(byte_budget=500)
    cache.put(("a", 3), ((1, 2, 3),) * 2)
    assert cache.get(("a", 3)) is not None
    cache.put(("b", 3), ((1, 2, 3),) * 3)
    assert cache.get(("a", 3)) is None and cache.get(("b", 3)) is not None
    cache.put(("huge", 3), ((1, 2, 3),) * 100)
    assert cache.get(("huge", 3)) is None
    CACHE.clear()
    assert count_class(query(["12-3"], (), 5)) == 52
    assert len(CACHE) == 1
    assert count_class(query(["12-3"], (), 5)) == 52
