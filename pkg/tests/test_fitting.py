from fractions import Fraction

import pytest

from vincular.errors import CapacityError, ShapeViolationError, UnsupportedParameterError
from vincular.fitting import fit_structure, shape_for, solve_exact
from vincular.oracle import count

STRUCTURED = ["f:31-2", "f:32-1", "f:13-2", "g:12-3", "g:21-3", "g:23-1", "g:31-2", "g:32-1", "h:23-1"]


def test_solve_exact():
    assert solve_exact([[2, 1], [1, 3]], [5, 10]) == [Fraction(1), Fraction(3)]
    with pytest.raises(ArithmeticError):
        solve_exact([[1, 2], [2, 4]], [1, 2])


def test_examples():
    f = fit_structure("f:31-2", 0)
    assert f.validity_floor == 0 and f.pow2 == ()
    assert all(f(n) == 1 + Fraction(n * (n - 1), 2) for n in range(12))
    g = fit_structure("g:21-3", 1)
    assert g.validity_floor == 2
    assert all(g(n) == (n - 2) * Fraction(2) ** (n - 3) for n in range(2, 15))
    j = fit_structure(("joint", 1, 1))
    assert all(j(n) == (n * n - 7 * n + 14) * Fraction(2) ** (n - 3) - 2 for n in range(1, 15))


def test_joint_two_two_reproduces_printed_formula():
    j = fit_structure(("joint", 2, 2))
    for n in range(1, 15):
        want = (n ** 4 - 18 * n ** 3 + 163 * n * n - 826 * n + 1832) * Fraction(2) ** (n - 7) - 4 * n - 14
        assert j(n) == want


@pytest.mark.parametrize("key", STRUCTURED)
@pytest.mark.parametrize("r", range(4))
def test_fit_agrees_with_enumeration(key, r):
    f = fit_structure(key, r)
    fam_avoid = {"f": "12-3", "g": "13-2", "h": "21-3"}[key[0]]
    for n in range(f.validity_floor, 9):
        assert f.value(n) == count([fam_avoid], [(key[2:], r)], n)
    dp, dq = f.degrees()
    shape = shape_for(key, r)
    assert dp <= max(shape.pow2_degree, -1) and dq <= max(shape.poly_degree, -1)


@pytest.mark.parametrize("key, r", [("f:32-1", 1), ("f:32-1", 2), ("f:32-1", 3),
                                    ("g:21-3", 1), ("g:21-3", 2), ("g:23-1", 1),
                                    ("h:23-1", 1), ("h:23-1", 2), ("h:23-1", 3)])
def test_stated_floors_are_too_low(key, r):
    shape = shape_for(key, r)
    assert shape.stated_floor is not None and shape.stated_floor < shape.floor
    with pytest.raises(ShapeViolationError):
        fit_structure(key, r, floor=shape.stated_floor)


def test_degree_bound_is_tight_for_32_1_r2():
    f = fit_structure("f:32-1", 2)
    assert f.degrees() == (-1, 3)


def test_errors():
    with pytest.raises(UnsupportedParameterError):
        fit_structure("h:12-3", 0)
    with pytest.raises(UnsupportedParameterError):
        fit_structure("f:13-2", -1)
    with pytest.raises(CapacityError):
        fit_structure("f:31-2", 3, sample_cap=8)


def test_wrong_shape_is_reported():
    # Bell numbers are not of the form P(n) 2^n + Q(n)
    from vincular.oracle import count as c
    with pytest.raises(ShapeViolationError):
        fit_structure("f:13-2", 1, sampler=lambda n: c(["12-3"], (), n), sample_cap=9)
