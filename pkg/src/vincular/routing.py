"""Pick an evaluation route for a count query and tag the result with it.

``oracle`` always enumerates.  ``auto`` prefers a refined recurrence, then
the exact structural fit for families that only have a closed-form shape,
and falls back to enumeration for everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ShapeViolationError, UnsupportedParameterError
from .fitting import fit_structure
from .oracle import count, query
from .pattern import parse_pattern
from .recurrences import AVOID_CLASS, FAMILIES, FIT_ONLY, FamilyId, as_family, eval_refined_family

ENGINES = ("oracle", "auto")


@dataclass(frozen=True)
class CountResult:
    value: int
    provenance: str  # oracle | recurrence | closed-form | series


def _match_family(q) -> tuple[FamilyId, int] | None:
    """Recognise queries of the form S_n(class pattern) with tau exactly r times."""
    avoid, contain = q.avoid, q.contain
    if len(avoid) != 1 or len(contain) != 1:
        return None
    (cls,) = avoid
    tau, r = contain[0]
    for symbol, cls_text in AVOID_CLASS.items():
        if cls == parse_pattern(cls_text) and tau.is_type_21 and tau != cls:
            return FamilyId(symbol, str(tau)), r
    return None


@lru_cache(maxsize=None)
def _fitted(family: FamilyId, r: int):
    return fit_structure(family, r)


def family_value(family, r: int, n: int, engine: str = "auto") -> CountResult:
    family = as_family(family)
    if engine not in ENGINES:
        raise UnsupportedParameterError(f"unknown engine {engine!r}")
    if engine == "auto":
        if family in FAMILIES:
            return CountResult(eval_refined_family(family, r, n), "recurrence")
        if family in FIT_ONLY:
            try:
                formula = _fitted(family, r)
            except ShapeViolationError:
                formula = None
            if formula is not None and n >= formula.validity_floor:
                return CountResult(formula.value(n), "closed-form")
    return CountResult(count([family.avoid_class], [(family.tau, r)], n), "oracle")


def count_value(avoid, contain, n: int, engine: str = "auto") -> CountResult:
    if engine not in ENGINES:
        raise UnsupportedParameterError(f"unknown engine {engine!r}")
    q = query(avoid, contain, n)
    if engine == "auto":
        hit = _match_family(q)
        if hit is not None:
            return family_value(hit[0], hit[1], n, engine)
    return CountResult(count(avoid, contain, n), "oracle")
