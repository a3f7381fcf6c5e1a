"""Printed closed-form counts, evaluated verbatim, and their oracle ledger.

Every catalog entry keeps the formula exactly as printed.  ``verify_report``
compares it with brute-force counts; when they disagree it tries the entry's
cataloged corrections in order and, failing those, the exact fit of the
relevant structure theorem.  A correction is accepted only if it agrees with
the oracle on the whole checked range.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from . import __version__
from .config import check_cap
from .errors import FloorError, NonIntegralError, ShapeViolationError, UnsupportedParameterError
from .fitting import fit_structure, shape_for
from .oracle import count
from .recurrences import FamilyId

Fr = Fraction


def _p2(e: int) -> Fraction:
    return Fr(2) ** e


@dataclass(frozen=True)
class Correction:
    note: str
    text: str
    evaluate: Callable[[int], Fraction]
    floor: int
    relabel_r: int | None = None


@dataclass(frozen=True)
class ClosedForm:
    id: str
    key: object  # FamilyId or ("joint", r, s)
    r: int
    printed: str
    floor: int
    evaluate: Callable[[int], Fraction]
    printed_r: int | None = None
    corrections: tuple = ()

    @property
    def compared_r(self) -> int:
        return self.r if self.printed_r is None else self.printed_r


def _fam(symbol, tau):
    return FamilyId(symbol, tau)


def _build_catalog() -> dict[str, ClosedForm]:
    F = lambda *a, **k: ClosedForm(*a, **k)
    f132, f312, f321 = _fam("f", "13-2"), _fam("f", "31-2"), _fam("f", "32-1")
    g123, g213, g231 = _fam("g", "12-3"), _fam("g", "21-3"), _fam("g", "23-1")
    g312, g321, h231 = _fam("g", "31-2"), _fam("g", "32-1"), _fam("h", "23-1")
    entries = [
        F("f_13-2;0", f132, 0, "2^(n-1)", 1, lambda n: _p2(n - 1)),
        F("f_13-2;1", f132, 1, "(n-3)2^(n-2)+1", 1, lambda n: (n - 3) * _p2(n - 2) + 1),
        F("f_13-2;2", f132, 2, "(n^2-3n-6)2^(n-4)+n", 1,
          lambda n: (n * n - 3 * n - 6) * _p2(n - 4) + n),
        F("f_13-2;3", f132, 3, "1/3(n^3-31n-18)2^(n-5)+n^2-n+1", 1,
          lambda n: Fr(1, 3) * (n ** 3 - 31 * n - 18) * _p2(n - 5) + n * n - n + 1),
        F("f_13-2;4", f132, 4, "1/3(n-1)(n^3+7n^2-546n-312)2^(n-8)+2/3(n-1)(n^2-2n+3)", 1,
          lambda n: Fr(1, 3) * (n - 1) * (n ** 3 + 7 * n * n - 546 * n - 312) * _p2(n - 8)
          + Fr(2, 3) * (n - 1) * (n * n - 2 * n + 3),
          corrections=(Correction(
              "digit typo: linear coefficient -546n should be -54n",
              "1/3(n-1)(n^3+7n^2-54n-312)2^(n-8)+2/3(n-1)(n^2-2n+3)",
              lambda n: Fr(1, 3) * (n - 1) * (n ** 3 + 7 * n * n - 54 * n - 312) * _p2(n - 8)
              + Fr(2, 3) * (n - 1) * (n * n - 2 * n + 3), 1),)),
        F("f_31-2;0", f312, 0, "1+n(n-1)/2", 0, lambda n: 1 + Fr(n * (n - 1), 2)),
        F("f_31-2;1", f312, 1, "n(n-1)(n-2)(3n-5)/24", 0,
          lambda n: Fr(n * (n - 1) * (n - 2) * (3 * n - 5), 24)),
        F("f_31-2;2", f312, 2, "n(n-1)(n-2)(n-3)(5n^2-3n-38)/720", 0,
          lambda n: Fr(n * (n - 1) * (n - 2) * (n - 3) * (5 * n * n - 3 * n - 38), 720)),
        F("f_31-2;3", f312, 3, "n(n-1)(n-2)(n-3)(n-4)(7n^3+10n^2+205n-1142)/40320", 0,
          lambda n: Fr(n * (n - 1) * (n - 2) * (n - 3) * (n - 4)
                       * (7 * n ** 3 + 10 * n * n + 205 * n - 1142), 40320)),
        F("f_32-1;0", f321, 0, "2n-2", 2, lambda n: Fr(2 * n - 2)),
        F("f_32-1;1", f321, 1, "(n-3)(2n-1)", 3, lambda n: Fr((n - 3) * (2 * n - 1)),
          corrections=(Correction("validity starts at n >= 4, not n >= 3 (the count at n=3 is 1)",
                                  "(n-3)(2n-1), n >= 4", lambda n: Fr((n - 3) * (2 * n - 1)), 4),)),
        F("f_32-1;2", f321, 2, "(n-4)(n^2-3n+1)", 4, lambda n: Fr((n - 4) * (n * n - 3 * n + 1)),
          corrections=(Correction("validity starts at n >= 5, not n >= 4 (the count at n=4 is 1)",
                                  "(n-4)(n^2-3n+1), n >= 5",
                                  lambda n: Fr((n - 4) * (n * n - 3 * n + 1)), 5),)),
        F("f_32-1;3", f321, 3, "(n-5)(2n^3-13n^2+47n-6)/6", 5,
          lambda n: Fr((n - 5) * (2 * n ** 3 - 13 * n * n + 47 * n - 6), 6),
          corrections=(Correction(
              "constant offset +8 missing and validity starts at n >= 6",
              "(n-5)(2n^3-13n^2+47n-6)/6+8, n >= 6",
              lambda n: Fr((n - 5) * (2 * n ** 3 - 13 * n * n + 47 * n - 6), 6) + 8, 6),)),
        F("g_12-3;0", g123, 0, "2^(n-1)", 1, lambda n: _p2(n - 1)),
        F("g_12-3;1", g123, 1, "(n-3)2^(n-2)+1", 1, lambda n: (n - 3) * _p2(n - 2) + 1,
          printed_r=2,
          corrections=(Correction("label printed as r=2 (duplicated); the values are those of r=1",
                                  "g_{12-3;1}(n)=(n-3)2^(n-2)+1",
                                  lambda n: (n - 3) * _p2(n - 2) + 1, 1, relabel_r=1),)),
        F("g_12-3;2", g123, 2, "(n^2-11n+34)2^(n-4)-n-2", 1,
          lambda n: (n * n - 11 * n + 34) * _p2(n - 4) - n - 2),
        F("g_12-3;3", g123, 3, "1/3(n^3-24n^2+257n-954)2^(n-5)+n^2+4n+10", 1,
          lambda n: Fr(1, 3) * (n ** 3 - 24 * n * n + 257 * n - 954) * _p2(n - 5) + n * n + 4 * n + 10),
        F("g_21-3;0", g213, 0, "2^(n-1)", 1, lambda n: _p2(n - 1)),
        F("g_21-3;1", g213, 1, "(n-2)2^(n-3)", 2, lambda n: (n - 2) * _p2(n - 3)),
        F("g_21-3;2", g213, 2, "(n^2+n-12)2^(n-6)", 3, lambda n: (n * n + n - 12) * _p2(n - 6)),
        F("g_21-3;3", g213, 3, "1/3(n-4)(n^2+13n+6)2^(n-8)", 4,
          lambda n: Fr(1, 3) * (n - 4) * (n * n + 13 * n + 6) * _p2(n - 8)),
        F("g_23-1;0", g231, 0, "2^(n-1)", 1, lambda n: _p2(n - 1)),
        F("g_23-1;1", g231, 1, "2^(n-2)-1", 2, lambda n: _p2(n - 2) - 1),
        F("g_23-1;2", g231, 2, "2^(n-1)-n-1", 3, lambda n: _p2(n - 1) - n - 1),
        F("g_23-1;3", g231, 3, "5*2^(n-3)-1/2(n^2-n+8)", 4,
          lambda n: 5 * _p2(n - 3) - Fr(n * n - n + 8, 2)),
        F("g_23-1;4", g231, 4, "2^n-1/6(n+1)(n^2-4n+24)", 5,
          lambda n: _p2(n) - Fr((n + 1) * (n * n - 4 * n + 24), 6)),
        F("g_31-2;0", g312, 0, "2^(n-1)", 1, lambda n: _p2(n - 1)),
        F("g_31-2;1", g312, 1, "(n-3)2^(n-2)+1", 1, lambda n: (n - 3) * _p2(n - 2) + 1),
        F("g_31-2;2", g312, 2, "(n^2-3n-14)2^(n-4)+1/2(n^2+n+12)", 1,
          lambda n: (n * n - 3 * n - 14) * _p2(n - 4) + Fr(n * n + n + 12, 2),
          corrections=(Correction("digit typo: constant 12 in the polynomial part should be 2",
                                  "(n^2-3n-14)2^(n-4)+1/2(n^2+n+2)",
                                  lambda n: (n * n - 3 * n - 14) * _p2(n - 4) + Fr(n * n + n + 2, 2), 1),)),
        F("g_31-2;3", g312, 3, "1/3(n^3-55n-90)2^(n-5)+1/12(n^4+11n^2+12n+12)", 1,
          lambda n: Fr(1, 3) * (n ** 3 - 55 * n - 90) * _p2(n - 5)
          + Fr(n ** 4 + 11 * n * n + 12 * n + 12, 12)),
        F("g_32-1;0", g321, 0, "1/2n(n-1)+1", 1, lambda n: Fr(n * (n - 1), 2) + 1),
        F("g_32-1;1", g321, 1, "1/6(n-1)(n-2)(2n-3)", 1, lambda n: Fr((n - 1) * (n - 2) * (2 * n - 3), 6)),
        # printed with an unbalanced parenthesis; read token by token it is 1/6(n-2)(n-3)*2n - 5
        F("g_32-1;2", g321, 2, "1/6(n-2)(n-3))2n-5)", 1,
          lambda n: Fr((n - 2) * (n - 3) * 2 * n, 6) - 5,
          corrections=(Correction(
              "unbalanced parenthesis read as (n-2)(n-3)(2n-5)/6; holds from n >= 2 (n >= r)",
              "1/6(n-2)(n-3)(2n-5), n >= 2",
              lambda n: Fr((n - 2) * (n - 3) * (2 * n - 5), 6), 2),)),
        F("g_32-1;3", g321, 3, "1/8(n-3)(n^3-3n^2-10n+32)", 1,
          lambda n: Fr((n - 3) * (n ** 3 - 3 * n * n - 10 * n + 32), 8),
          corrections=(Correction("holds from n >= 3 (n >= r), not from n >= 1",
                                  "1/8(n-3)(n^3-3n^2-10n+32), n >= 3",
                                  lambda n: Fr((n - 3) * (n ** 3 - 3 * n * n - 10 * n + 32), 8), 3),)),
        F("g_32-1;4", g321, 4, "1/24(n-4)(3n^3-10n^2-55n+198)", 1,
          lambda n: Fr((n - 4) * (3 * n ** 3 - 10 * n * n - 55 * n + 198), 24),
          corrections=(Correction("holds from n >= 4 (n >= r), not from n >= 1",
                                  "1/24(n-4)(3n^3-10n^2-55n+198), n >= 4",
                                  lambda n: Fr((n - 4) * (3 * n ** 3 - 10 * n * n - 55 * n + 198), 24), 4),)),
        F("h_23-1;0", h231, 0, "2^(n-1)", 1, lambda n: _p2(n - 1)),
        F("h_23-1;1", h231, 1, "(n-2)2^(n-3)", 2, lambda n: (n - 2) * _p2(n - 3)),
        F("h_23-1;2", h231, 2, "(n-3)(n+8)2^(n-6)", 3, lambda n: (n - 3) * (n + 8) * _p2(n - 6)),
        F("h_23-1;3", h231, 3, "1/3(n-4)(n^2+25n+42)", 4,
          lambda n: Fr((n - 4) * (n * n + 25 * n + 42), 3),
          corrections=(Correction("missing factor 2^(n-8)",
                                  "1/3(n-4)(n^2+25n+42)2^(n-8)",
                                  lambda n: Fr((n - 4) * (n * n + 25 * n + 42), 3) * _p2(n - 8), 4),)),
        F("a^1,1", ("joint", 1, 1), 1, "(n^2-7n+14)2^(n-3)-2", 1,
          lambda n: (n * n - 7 * n + 14) * _p2(n - 3) - 2),
        F("a^2,2", ("joint", 2, 2), 2, "(n^4-18n^3+163n^2-826n+1832)2^(n-7)-4n-14", 1,
          lambda n: (n ** 4 - 18 * n ** 3 + 163 * n * n - 826 * n + 1832) * _p2(n - 7) - 4 * n - 14),
    ]
    return {e.id: e for e in entries}


CATALOG = _build_catalog()


def get_closed_form(cf_id: str) -> ClosedForm:
    try:
        return CATALOG[cf_id]
    except KeyError:
        raise UnsupportedParameterError(f"unknown closed-form id {cf_id!r}") from None


def _integral(v: Fraction, n: int) -> int:
    if v.denominator != 1:
        raise NonIntegralError(n, v)
    return int(v)


def eval_closed_form(cf_id: str, n: int) -> int:
    """The printed formula at n, exactly as printed."""
    cf = get_closed_form(cf_id)
    if n < cf.floor:
        raise FloorError(f"{cf_id} is stated for n >= {cf.floor}, got n={n}")
    return _integral(Fr(cf.evaluate(n)), n)


@lru_cache(maxsize=None)
def oracle_value(key, r: int, n: int) -> int:
    """Brute-force count for a catalog key."""
    if isinstance(key, tuple):
        _, a, b = key
        return count((), [("12-3", a), ("13-2", b)], n)
    return count([key.avoid_class], [(key.tau, r)], n)


def _first_disagreement(evaluate, floor, key, r, n_max):
    for n in range(floor, n_max + 1):
        want = oracle_value(key, r, n)
        got = Fr(evaluate(n))
        if got != want:
            return n, got, want
    return None


@dataclass
class LedgerEntry:
    id: str
    status: str  # MATCH | MISMATCH | CORRECTED
    printed: str
    printed_floor: int
    n_range: tuple
    first_bad_n: int | None = None
    printed_value: str | None = None
    oracle_value: int | None = None
    correction: str | None = None
    corrected_form: str | None = None
    corrected_floor: int | None = None


@dataclass
class VerificationReport:
    n_max: int
    entries: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(e.status != "MISMATCH" for e in self.entries.values())

    def statuses(self) -> dict[str, str]:
        return {k: e.status for k, e in self.entries.items()}

    def to_json(self) -> str:
        body = {
            "schema": "vincular-typo-ledger/1",
            "version": self.version,
            "n_max": self.n_max,
            "entries": [asdict(e) for e in self.entries.values()],
        }
        return json.dumps(body, indent=2)

    def to_text(self) -> str:
        lines = [f"# closed-form ledger (toolkit {self.version}, checked up to n={self.n_max})", ""]
        for e in self.entries.values():
            lines.append(f"{e.id:10s} {e.status:9s} printed: {e.printed}  [n >= {e.printed_floor}]")
            if e.status != "MATCH":
                lines.append(f"{'':21s}first disagreement at n={e.first_bad_n}: "
                             f"printed {e.printed_value}, oracle {e.oracle_value}")
            if e.status == "CORRECTED":
                lines.append(f"{'':21s}corrected: {e.corrected_form}  [n >= {e.corrected_floor}]")
                lines.append(f"{'':21s}note: {e.correction}")
        return "\n".join(lines) + "\n"


def _fit_correction(cf: ClosedForm, n_max: int) -> Correction | None:
    try:
        shape = shape_for(cf.key, cf.r)
        formula = fit_structure(cf.key, cf.r)
    except (UnsupportedParameterError, ShapeViolationError):
        return None
    return Correction(f"replaced by the exact fit of the {shape.name} shape for {shape.source}",
                      str(formula), formula, formula.validity_floor)


def verify_one(cf: ClosedForm, n_max: int) -> LedgerEntry:
    key = cf.key
    entry = LedgerEntry(cf.id, "MATCH", cf.printed, cf.floor, (cf.floor, n_max))
    bad = _first_disagreement(cf.evaluate, cf.floor, key, cf.compared_r, n_max)
    if bad is None:
        return entry
    entry.status = "MISMATCH"
    entry.first_bad_n, got, entry.oracle_value = bad
    entry.printed_value = str(got)
    candidates = list(cf.corrections)
    fitted = _fit_correction(cf, n_max)
    if fitted is not None:
        candidates.append(fitted)
    for c in candidates:
        r = cf.r if c.relabel_r is None else c.relabel_r
        if _first_disagreement(c.evaluate, c.floor, key, r, n_max) is None:
            entry.status = "CORRECTED"
            entry.correction = c.note
            entry.corrected_form = c.text
            entry.corrected_floor = c.floor
            break
    return entry


def verify_report(ids: Iterable[str] | None = None, n_max: int = 9) -> VerificationReport:
    """Compare catalog entries with the oracle for floor <= n <= n_max."""
    check_cap(n_max)
    ids = list(CATALOG) if ids is None else list(ids)
    report = VerificationReport(n_max)
    for cf_id in ids:
        report.entries[cf_id] = verify_one(get_closed_form(cf_id), n_max)
    return report
