import pytest

from vincular.errors import UnsupportedParameterError
from vincular.oracle import count
from vincular.routing import count_value, family_value


def test_recognised_family_uses_recurrence():
    res = count_value(["12-3"], [("13-2", 2)], 7)
    assert res.provenance == "recurrence" and res.value == count(["12-3"], [("13-2", 2)], 7)


def test_fit_only_family_uses_closed_form_above_floor():
    res = family_value("g:23-1", 2, 8)
    assert res.provenance == "closed-form" and res.value == count(["13-2"], [("23-1", 2)], 8)
    low = family_value("g:23-1", 2, 1)
    assert low.provenance == "oracle" and low.value == 0


def test_other_queries_enumerate():
    res = count_value(["12-3", "21-3"], [("13-2", 1)], 6)
    assert res.provenance == "oracle"


def test_oracle_engine_forced():
    assert family_value("f:13-2", 1, 6, engine="oracle").provenance == "oracle"


def test_unknown_engine():
    with pytest.raises(UnsupportedParameterError):
        count_value(["12-3"], (), 3, engine="magic")
