from fractions import Fraction

import pytest

from vincular.errors import UnsupportedParameterError
from vincular.gf import (CFSpec, FORMULAS, cf_expand, cf_series, iterate_functional_equation,
                         pq_integer, series_from_formula)
from vincular.oracle import count, joint_weight_sum
from vincular.pattern import k_pattern
from vincular.recurrences import FAMILIES, FamilyId
from vincular.series import coeff_counts


def test_formula_examples():
    assert coeff_counts(series_from_formula("bell", order=6)) == [1, 1, 2, 5, 15, 52, 203]
    assert series_from_formula("f23_1_r0", order=4).coeffs[3] == 4
    assert series_from_formula("ext2", r=0, order=5).coeffs[5] == 8


def test_formula_errors():
    with pytest.raises(UnsupportedParameterError):
        series_from_formula("nope")
    with pytest.raises(UnsupportedParameterError):
        series_from_formula("nodash_k", order=4)
    with pytest.raises(UnsupportedParameterError):
        series_from_formula("ext2", r=-1, order=4)


@pytest.mark.parametrize("k", (3, 4))
def test_length_k_egfs_match_oracle(k):
    nodash = k_pattern("nodash", k)
    for r in range(3):
        got = coeff_counts(series_from_formula("nodash_k", r=r, order=8, k=k))
        assert got == [count(["12-3"], [(nodash, r)], n) for n in range(9)]
    got = coeff_counts(series_from_formula("dash_k", order=8, k=k))
    assert got == [count(["12-3", k_pattern("dash", k)], (), n) for n in range(9)]


def test_kkm1_egf():
    got = coeff_counts(series_from_formula("kkm1_k4", order=8))
    assert got == [count(["12-3", k_pattern("kkm1", 4)], (), n) for n in range(9)]


def test_23_1_series():
    truth0 = [count(["12-3"], [("23-1", 0)], n) for n in range(9)]
    truth1 = [count(["12-3"], [("23-1", 1)], n) for n in range(9)]
    assert coeff_counts(series_from_formula("f23_1_r0", order=8)) == truth0
    assert coeff_counts(series_from_formula("f23_1_r1_unfolded", order=8)) == truth1
    # the folded printed sum drifts from n = 4 on
    printed = coeff_counts(series_from_formula("f23_1_r1", order=8))
    assert printed[:4] == truth1[:4] and printed[4] != truth1[4]


def test_32_1_series_in_21_3_avoiders():
    truth0 = [count(["21-3"], [("32-1", 0)], n) for n in range(9)]
    truth1 = [count(["21-3"], [("32-1", 1)], n) for n in range(9)]
    assert coeff_counts(series_from_formula("h32_1_r0", order=8)) == truth0
    assert truth1 == [0, 0, 0, 1, 4, 13, 44, 161, 625]
    assert coeff_counts(series_from_formula("h32_1_r1", order=8)) != truth1


def test_ext2_counts_beyond_r0():
    # exact counts, far from the displayed rational function for r >= 1
    r1 = [count(["12-3", "21-3"], [("13-2", 1)], n) for n in range(10)]
    assert r1 == [0, 0, 0, 1, 3, 7, 15, 30, 58, 109]
    assert coeff_counts(series_from_formula("ext2", r=1, order=9)) != r1


@pytest.mark.parametrize("family, key", [("F_13_2", ("f", "13-2")), ("F_23_1", ("f", "23-1")),
                                         ("H_13_2", ("h", "13-2")), ("H_31_2", ("h", "31-2"))])
def test_functional_equations(family, key):
    fam = FAMILIES[FamilyId(*key)]
    for r in range(4):
        got = coeff_counts(iterate_functional_equation(family, r, 9))
        assert got == [fam.total(r, n) for n in range(10)]


def test_functional_equation_examples():
    assert coeff_counts(iterate_functional_equation("F_13_2", 0, 6)) == [1, 1, 2, 4, 8, 16, 32]
    assert iterate_functional_equation("F_23_1", 0, 4).coeffs[4] == 9
    assert iterate_functional_equation("F_13_2", 1, 5).coeffs[4] == 5


def test_h_streams_agree_with_f_stream():
    for r in range(4):
        f = iterate_functional_equation("F_13_2", r, 9)
        assert iterate_functional_equation("H_13_2", r, 9) == f
        assert iterate_functional_equation("H_31_2", r, 9) == f


def test_pq_integer():
    assert pq_integer(1, 5, 7) == 1
    assert pq_integer(2, Fraction(2, 3), 5) == Fraction(2, 3) + 5
    assert pq_integer(3, 2, 1) == 7
    with pytest.raises(ValueError):
        pq_integer(0, 1, 1)


def test_cf_examples():
    assert coeff_counts(cf_expand(CFSpec(12, 1, 1, 1, 1), 5)) == [1, 1, 2, 6, 24, 120]
    assert cf_expand(CFSpec(6, 2, 3, 1, 1), 2).coeffs[2] == 10
    assert cf_expand(CFSpec(1, 9, 9, 9, 9), 3).coeffs[0] == 1


@pytest.mark.parametrize("pt", [(2, 3, Fraction(1, 2), Fraction(5, 3)), (Fraction(1, 3), 1, 2, Fraction(1, 2))])
def test_cf_matches_weighted_enumeration(pt):
    s = cf_series(*pt, 6)
    assert list(s.coeffs) == [joint_weight_sum(n, *pt) for n in range(7)]


def test_cf_truncation_stabilizes():
    a = cf_expand(CFSpec(8, 2, 3, 1, 2), 4)
    b = cf_expand(CFSpec(20, 2, 3, 1, 2), 4)
    assert a == b


def test_formula_registry_complete():
    assert {"bell", "dash_k", "nodash_k", "kkm1_k4", "f23_1_r0", "f23_1_r1", "h32_1_r0",
            "h32_1_r1", "ext2"} <= set(FORMULAS)
