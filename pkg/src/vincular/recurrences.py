"""Exact evaluators for the refined-count recurrences.

Every family counts permutations avoiding one type (2,1) pattern (12-3 for
``f``, 13-2 for ``g``, 21-3 for ``h``) that contain ``tau`` exactly r times.
``refined(r, n, i)`` is the number of those whose first letter is i.  All
counts with r < 0 are zero; ``total(r, 0)`` is 1 exactly when r = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import RoutedToFitError, UnsupportedParameterError

AVOID_CLASS = {"f": "12-3", "g": "13-2", "h": "21-3"}


@dataclass(frozen=True)
class FamilyId:
    symbol: str
    tau: str

    def __post_init__(self):
        if self.symbol not in AVOID_CLASS:
            raise ValueError(f"unknown family symbol {self.symbol!r}")
        if self.tau == AVOID_CLASS[self.symbol]:
            raise ValueError(f"{self.symbol} families cannot count their own avoided pattern")

    @property
    def avoid_class(self) -> str:
        return AVOID_CLASS[self.symbol]

    def __str__(self):
        return f"{self.symbol}:{self.tau}"

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        symbol, _, tau = text.partition(":")
        return cls(symbol.strip(), tau.strip())


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


class RefinedFamily:
    """Base: ``total`` and ``refined`` guard r < 0 before touching the memo."""

    family: FamilyId

    def __init__(self):
        self._total = lru_cache(maxsize=None)(self._total_impl)
        self._refined = lru_cache(maxsize=None)(self._refined_impl)

    def total(self, r: int, n: int) -> int:
        if r < 0 or n < 0:
            return 0
        if n == 0:
            return 1 if r == 0 else 0
        return self._total(r, n)

    def refined(self, r: int, n: int, i: int) -> int:
        if r < 0 or n < 1 or not 1 <= i <= n:
            return 0
        if n == 1:
            return 1 if r == 0 else 0
        return self._refined(r, n, i)

    def _total_impl(self, r, n):
        return sum(self.refined(r, n, i) for i in range(1, n + 1))

    def _refined_impl(self, r, n, i):
        raise NotImplementedError

    def cache_clear(self):
        self._total.cache_clear()
        self._refined.cache_clear()


class F13_2(RefinedFamily):
    family = FamilyId("f", "13-2")

    def _refined_impl(self, r, n, i):
        if i >= n - 1:
            return self.total(r, n - 1)
        return self.total(r - (n - 1 - i), n - 2) + sum(
            self.refined(r, n - 1, j) for j in range(1, i))


class F21_3(RefinedFamily):
    family = FamilyId("f", "21-3")

    def _total_impl(self, r, n):
        return self.total(r, n - 1) + sum(self.refined(r, n, i) for i in range(1, n))

    def _refined_impl(self, r, n, i):
        if i == n:
            return self.total(r, n - 1)
        # second letter n, or a smaller letter j followed by all of i+1..n
        return self.total(r, n - 2) + sum(
            self.refined(r - (n - i), n - 1, j) for j in range(1, i))


class F23_1(RefinedFamily):
    family = FamilyId("f", "23-1")

    def _total_impl(self, r, n):
        return self.total(r, n - 1) + sum(self.refined(r, n, i) for i in range(1, n))

    def _refined_impl(self, r, n, i):
        if i == n:
            return self.total(r, n - 1)
        return self.total(r - (i - 1), n - 2) + sum(
            self.refined(r, n - 1, j) for j in range(1, i))


class F31_2(RefinedFamily):
    family = FamilyId("f", "31-2")

    def _refined_impl(self, r, n, i):
        if i == n:
            return sum(self.refined(r + 1 - j, n - 1, n - j) for j in range(1, n))
        return self.refined(r, n - 1, n - 1) + sum(
            self.refined(r - (i - 1 - j), n - 1, j) for j in range(1, i))


class F32_1(RefinedFamily):
    family = FamilyId("f", "32-1")

    def _refined_impl(self, r, n, i):
        if i == n:
            return sum(self.refined(r + 1 - j, n - 1, j) for j in range(1, n))
        return self.refined(r, n - 1, n - 1) + sum(
            self.refined(r + 1 - j, n - 1, j) for j in range(1, i))


class G12_3(RefinedFamily):
    family = FamilyId("g", "12-3")

    def _refined_impl(self, r, n, i):
        if i >= n - 1:
            return self.total(r, n - 1)
        if i <= n - r - 2:
            return 0
        return self.refined(r - (n - 1 - i), n - 1, i) + sum(
            self.refined(r, n - 1, j) for j in range(1, i))


class G21_3(RefinedFamily):
    family = FamilyId("g", "21-3")

    def _total_impl(self, r, n):
        return self.total(r, n - 1) + sum(self.refined(r, n, i) for i in range(1, n))

    def _refined_impl(self, r, n, i):
        if i == n:
            return self.total(r, n - 1)
        return self.refined(r, n - 1, i) + sum(
            self.refined(r - (n - i), n - 1, j) for j in range(1, i))


class H12_3(RefinedFamily):
    family = FamilyId("h", "12-3")

    def _total_impl(self, r, n):
        return self.total(r, n - 1) + sum(self.refined(r, n, j) for j in range(1, n))

    def _refined_impl(self, r, n, j):
        if j == n:
            return self.total(r, n - 1)
        return self.total(r, n - 2) + sum(
            self.refined(r - (n - 1 - i), n - 1, i) for i in range(j, n - 1))


class H13_2(RefinedFamily):
    family = FamilyId("h", "13-2")

    def _refined_impl(self, r, n, i):
        if i == n:
            return self.total(r, n - 1)
        m = n - i
        return sum(comb(m - 1, j) * self.total(r - j, n - 1 - m + j) for j in range(m))


class H23_1(RefinedFamily):
    family = FamilyId("h", "23-1")

    def _total_impl(self, r, n):
        return self.total(r, n - 1) + sum(self.refined(r, n, j) for j in range(1, n))

    def _refined_impl(self, r, n, j):
        if j == n:
            return self.total(r, n - 1)
        return sum(self.refined(r - (j - 1), n - 1, i) for i in range(j, n))


class H31_2(RefinedFamily):
    family = FamilyId("h", "31-2")

    def _refined_impl(self, r, n, m):
        if m == n:
            return sum(self.refined(r - j, n - 1, n - 1 - j) for j in range(r + 1))
        return sum((-1) ** j * comb(m - 1, j) * self.total(r, n - 1 - j) for j in range(m))


class H32_1(RefinedFamily):
    family = FamilyId("h", "32-1")

    def _refined_impl(self, r, n, j):
        if j == n:
            return sum(self.refined(r + 1 - m, n - 1, m) for m in range(1, min(n - 1, r + 1) + 1))
        return self.total(r, n - 1) - sum(self.refined(r, n - 1, i) for i in range(1, j))


FAMILIES: dict[FamilyId, RefinedFamily] = {
    cls.family: cls() for cls in (F13_2, F21_3, F23_1, F31_2, F32_1, G12_3, G21_3,
                                  H12_3, H13_2, H23_1, H31_2, H32_1)
}

FIT_ONLY = frozenset(FamilyId("g", t) for t in ("23-1", "31-2", "32-1"))


def as_family(family) -> FamilyId:
    return family if isinstance(family, FamilyId) else FamilyId.parse(family)


def eval_refined_family(family, r: int, n: int) -> int:
    """f/g/h_{tau;r}(n) from the family's refined recurrence."""
    family = as_family(family)
    if family in FIT_ONLY:
        raise RoutedToFitError(
            f"{family} has no explicit recurrence; evaluate it with fit_structure")
    if family not in FAMILIES:
        raise UnsupportedParameterError(f"no recurrence for family {family}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return FAMILIES[family].total(r, n)


def refined_count(family, r: int, n: int, first: int) -> int:
    """Members of the family whose first letter is ``first``."""
    return FAMILIES[as_family(family)].refined(r, n, first)


# Length-k families inside S_n(12-3).

K_TAGS = ("NODASH_K", "DASH_K", "K_KM1")


@lru_cache(maxsize=None)
def _nodash(k: int, r: int, n: int) -> int:
    if r < 0:
        return 0
    if n == 0:
        return 1 if r == 0 else 0
    # the maximum sits at position j after a decreasing run of j-1 letters
    total = 0
    for j in range(1, n + 1):
        rr = r if j <= k - 1 else r - 1
        total += comb(n - 1, j - 1) * _nodash(k, rr, n - j)
    return total


@lru_cache(maxsize=None)
def _dash(k: int, n: int) -> int:
    if n == 0:
        return 1
    return sum(comb(n - 1, j) * _dash(k, n - 1 - j) for j in range(min(k - 2, n - 1) + 1))


@lru_cache(maxsize=None)
def _kkm1(k: int, n: int) -> int:
    if n == 0:
        return 1
    head = sum(comb(n - 1, j) * _kkm1(k, n - 1 - j) for j in range(min(k - 3, n - 1) + 1))
    tail = sum(_binom(n - j + k - 4, k - 3) * _kkm1(k, n - 1 - j) for j in range(k - 2, n))
    return head + tail


def eval_k_family(tag: str, k: int, r: int, n: int) -> int:
    """Counts in S_n(12-3) for the length-k patterns.

    NODASH_K: (k-1)...21k contained exactly r times; DASH_K: avoiding
    (k-1)...21-k; K_KM1: avoiding (k-2)...21k-(k-1).
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if tag == "NODASH_K":
        if k < 2:
            raise UnsupportedParameterError("NODASH_K needs k >= 2")
        return _nodash(k, r, n)
    if tag == "DASH_K":
        if k < 2:
            raise UnsupportedParameterError("DASH_K needs k >= 2")
        if r != 0:
            raise UnsupportedParameterError("DASH_K is only available for r = 0")
        return _dash(k, n)
    if tag == "K_KM1":
        if k < 3:
            raise UnsupportedParameterError("K_KM1 needs k >= 3")
        if r != 0:
            raise UnsupportedParameterError("K_KM1 is only available for r = 0")
        return _kkm1(k, n)
    raise UnsupportedParameterError(f"unknown k-family tag {tag!r}")
