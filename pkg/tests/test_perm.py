from math import factorial

import pytest
from hypothesis import given, strategies as st

from vincular.config import HARD_CAP, check_cap, working_cap
from vincular.errors import EnumerationCapError, PermutationError
from vincular.perm import (adjacent_ascents, adjacent_descents, all_permutations, complement,
                           format_permutation, is_permutation, make_permutation,
                           parse_permutation, reverse, standardize)

perms = st.integers(0, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def test_all_permutations_small():
    assert list(all_permutations(0)) == [()]
    three = list(all_permutations(3))
    assert len(three) == 6 and three[0] == (1, 2, 3) and three[-1] == (3, 2, 1)
    assert len(list(all_permutations(4))) == 24
    assert three == sorted(three)


def test_all_permutations_first_element_block():
    block = list(all_permutations(4, first=2))
    assert len(block) == 6 and all(p[0] == 2 for p in block)
    with pytest.raises(ValueError):
        list(all_permutations(3, first=4))


def test_cap():
    with pytest.raises(EnumerationCapError) as exc:
        list(all_permutations(HARD_CAP + 1))
    assert str(HARD_CAP) in str(exc.value)


def test_working_cap_env(monkeypatch):
    monkeypatch.delenv("VINCULAR_MAX_N", raising=False)
    assert working_cap() == 10
    monkeypatch.setenv("VINCULAR_MAX_N", "50")
    assert working_cap() == HARD_CAP
    monkeypatch.setenv("VINCULAR_MAX_N", "4")
    with pytest.raises(EnumerationCapError):
        check_cap(5)


def test_symmetries_examples():
    assert reverse((1, 2, 3)) == (3, 2, 1)
    assert reverse(()) == ()
    assert reverse((2, 1, 3)) == (3, 1, 2)
    assert complement((1, 2, 3)) == (3, 2, 1)
    assert complement((2, 1, 3)) == (2, 3, 1)
    assert complement(()) == ()


def test_ascents_examples():
    assert adjacent_ascents((1, 2, 3)) == 2
    assert adjacent_ascents((3, 2, 1)) == 0
    assert adjacent_ascents((2, 1, 3)) == 1


def test_make_and_parse():
    assert make_permutation([2, 1, 3]) == (2, 1, 3)
    with pytest.raises(PermutationError):
        make_permutation([1, 1])
    assert parse_permutation("2134") == (2, 1, 3, 4)
    assert parse_permutation("()") == ()
    assert parse_permutation("10,1,2,3,4,5,6,7,8,9")[0] == 10
    with pytest.raises(PermutationError):
        parse_permutation("12a")
    assert standardize((40, 10, 25)) == (3, 1, 2)


@given(perms)
def test_involutions(p):
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p
    assert is_permutation(reverse(p)) and is_permutation(complement(p))


@given(perms)
def test_ascents_descents_partition(p):
    assert adjacent_ascents(p) + adjacent_descents(p) == max(len(p) - 1, 0)
    assert adjacent_ascents(complement(p)) == adjacent_descents(p)


@given(perms)
def test_format_roundtrip(p):
    assert parse_permutation(format_permutation(p)) == p


@pytest.mark.parametrize("n", range(7))
def test_enumeration_size(n):
    ps = list(all_permutations(n))
    assert len(ps) == factorial(n) == len(set(ps))
