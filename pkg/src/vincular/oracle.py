"""Ground-truth enumeration.

Everything else in the package is checked against the counts produced here.
Two exhaustive routes are provided:

* ``method="prefix"`` (default) walks S_n in lexicographic order as a tree of
  prefixes and cuts a branch as soon as its prefix already holds a forbidden
  occurrence (or too many occurrences of a counted pattern).  Occurrences in a
  prefix stay occurrences in every extension, so no permutation is lost.
* ``method="filter"`` runs over every element of S_n and filters.

``count_by_rank_states`` is a third, polynomial-time exact counter restricted
to type (2,1) patterns; it exists so that interpolation can sample n beyond
the brute-force cap.
"""

from __future__ import annotations

import threading
from collections import Counter, OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import check_cap
from .errors import UnsatisfiableQueryError
from .pattern import VincularPattern, occurrences, parse_pattern
from .perm import Permutation, adjacent_ascents, adjacent_descents, all_permutations

PatternLike = "VincularPattern | str"


def _pat(tau) -> VincularPattern:
    return tau if isinstance(tau, VincularPattern) else parse_pattern(tau)


@dataclass(frozen=True)
class ClassQuery:
    """Permutations of size n avoiding every pattern in ``avoid`` and holding
    exactly r occurrences of each (pattern, r) in ``contain``."""

    avoid: frozenset = frozenset()
    contain: tuple = ()
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "avoid", frozenset(_pat(t) for t in self.avoid))
        contain = self.contain
        if contain and isinstance(contain[0], (str, VincularPattern)):
            contain = (contain,)
        norm = tuple((_pat(t), int(r)) for t, r in contain)
        object.__setattr__(self, "contain", norm)
        for tau, r in norm:
            if r < 0:
                raise ValueError(f"occurrence count must be nonnegative, got {r}")

    @property
    def satisfiable(self) -> bool:
        return not any(r >= 1 and tau in self.avoid for tau, r in self.contain)

    def effective(self) -> tuple[frozenset, tuple]:
        """Fold ``(tau, 0)`` constraints into the avoid set."""
        avoid = set(self.avoid)
        contain = []
        for tau, r in self.contain:
            if r == 0:
                avoid.add(tau)
            else:
                contain.append((tau, r))
        return frozenset(avoid), tuple(contain)


def query(avoid: Iterable = (), contain=(), n: int = 0) -> ClassQuery:
    return ClassQuery(frozenset(avoid), tuple(contain) if contain else (), n)


def _prefix_search(avoid, contain, n, first=None) -> Iterator[Permutation]:
    avoid = tuple(avoid)
    pats = tuple(t for t, _ in contain)
    limits = tuple(r for _, r in contain)
    word: list[int] = []
    free = [True] * (n + 1)
    counts = [0] * len(pats)

    def extend() -> Iterator[Permutation]:
        if len(word) == n:
            if all(c == r for c, r in zip(counts, limits)):
                yield tuple(word)
            return
        if not word and first is not None:
            candidates: Iterable[int] = (first,)
        else:
            candidates = range(1, n + 1)
        for v in candidates:
            if not free[v]:
                continue
            word.append(v)
            if not any(occurrences(s, word, anchor_last=True) for s in avoid):
                added = [occurrences(t, word, anchor_last=True) for t in pats]
                if all(c + a <= r for c, a, r in zip(counts, added, limits)):
                    for i, a in enumerate(added):
                        counts[i] += a
                    free[v] = False
                    yield from extend()
                    free[v] = True
                    for i, a in enumerate(added):
                        counts[i] -= a
            word.pop()

    yield from extend()


def _filter_search(avoid, contain, n, first=None) -> Iterator[Permutation]:
    for p in all_permutations(n, first=first):
        if any(occurrences(s, p) for s in avoid):
            continue
        if all(occurrences(t, p) == r for t, r in contain):
            yield p


_SEARCHES = {"prefix": _prefix_search, "filter": _filter_search}


class ClassCache:
    """LRU memo of (avoid set, n) -> member tuple, bounded by an estimated byte
    budget.  Entries are inserted whole under a lock, so readers never see a
    half-built list."""

    def __init__(self, byte_budget: int = 64 * 2**20):
        self.byte_budget = byte_budget
        self._entries: OrderedDict = OrderedDict()
        self._sizes: dict = {}
        self._used = 0
        self._lock = threading.Lock()

    @staticmethod
    def _estimate(perms: tuple) -> int:
        n = len(perms[0]) if perms else 0
        return 64 + len(perms) * (56 + 8 * n)

    def get(self, key):
        with self._lock:
            if key in self._entries:
                self._entries.move_to_end(key)
                return self._entries[key]
        return None

    def put(self, key, perms: tuple) -> None:
        size = self._estimate(perms)
        if size > self.byte_budget:
            return
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = perms
            self._sizes[key] = size
            self._used += size
            while self._used > self.byte_budget:
                old, _ = self._entries.popitem(last=False)
                self._used -= self._sizes.pop(old)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._sizes.clear()
            self._used = 0

    def __len__(self):
        return len(self._entries)


CACHE = ClassCache()


def _partition_worker(args):
    method, avoid, contain, n, first = args
    return list(_SEARCHES[method](avoid, contain, n, first))


def _members(q: ClassQuery, method: str, workers: int | None) -> tuple:
    if not q.satisfiable:
        bad = [str(t) for t, r in q.contain if r >= 1 and t in q.avoid]
        raise UnsatisfiableQueryError(f"pattern(s) {bad} must be both avoided and contained")
    check_cap(q.n)
    avoid, contain = q.effective()
    cacheable = not contain and method == "prefix"
    key = (avoid, q.n)
    if cacheable:
        hit = CACHE.get(key)
        if hit is not None:
            return hit
    if workers and workers > 1 and q.n >= 2:
        jobs = [(method, avoid, contain, q.n, v) for v in range(1, q.n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_partition_worker, jobs))
        members = tuple(p for part in parts for p in part)
    else:
        members = tuple(_SEARCHES[method](avoid, contain, q.n))
    if cacheable:
        CACHE.put(key, members)
    return members


def list_class(q: ClassQuery, method: str = "prefix", workers: int | None = None) -> list[Permutation]:
    """Members of the class in lexicographic order."""
    return list(_members(q, method, workers))


def count_class(q: ClassQuery, method: str = "prefix", workers: int | None = None) -> int:
    return len(_members(q, method, workers))


def count(avoid: Iterable = (), contain=(), n: int = 0, **kw) -> int:
    """Shorthand for ``count_class(query(avoid, contain, n))``."""
    return count_class(query(avoid, contain, n), **kw)


def distribution(avoid: Iterable, tau, n: int, method: str = "prefix") -> dict[int, int]:
    """Map r -> number of members of S_n(avoid) with exactly r occurrences of tau."""
    tau = _pat(tau)
    members = _members(query(avoid, (), n), method, None)
    dist = Counter(occurrences(tau, p) for p in members)
    return dict(sorted(dist.items()))


_P_PATTERN = parse_pattern("2-31")
_Q_PATTERN = parse_pattern("31-2")


def joint_weight_sum(n: int, x, y, p, q) -> Fraction:
    """Sum over S_n of x^(1+asc) y^(des) p^(#2-31) q^(#31-2); 1 when n = 0."""
    check_cap(n)
    x, y, p, q = (Fraction(v) for v in (x, y, p, q))
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in all_permutations(n):
        total += (x ** (1 + adjacent_ascents(perm)) * y ** adjacent_descents(perm)
                  * p ** occurrences(_P_PATTERN, perm) * q ** occurrences(_Q_PATTERN, perm))
    return total


# Rank-state counting for type (2,1) patterns.
#
# After placing a prefix, all later occurrences depend only on how many unused
# values lie below the last placed value (t) and how many are unused (m).  When
# the next value is chosen as the u-th smallest unused one, the new adjacent
# pair fixes the number of occurrences it heads: the count of unused values in
# the pattern's target region (below, between, above the pair).

def _type21_profile(tau: VincularPattern) -> tuple[bool, int]:
    if not tau.is_type_21:
        raise ValueError(f"{tau} is not a type (2,1) pattern")
    a, b, c = tau.letters
    lo, hi = min(a, b), max(a, b)
    region = 0 if c < lo else (2 if c > hi else 1)
    return a < b, region


@lru_cache(maxsize=None)
def _rank_state_table(profiles: tuple, targets: tuple, n: int) -> int:
    @lru_cache(maxsize=None)
    def ways(m: int, t: int, budget: tuple) -> int:
        # m unused values, t of them below the last placed value
        if m == 0:
            return 1 if all(b == 0 for b in budget) else 0
        total = 0
        for u in range(m):
            if u >= t:
                regions = (t, u - t, m - 1 - u)
                ascent = True
            else:
                regions = (u, t - 1 - u, m - t)
                ascent = False
            nb = []
            ok = True
            for (asc, region), b in zip(profiles, budget):
                add = regions[region] if asc == ascent else 0
                if b is not None:
                    b -= add
                    if b < 0:
                        ok = False
                        break
                nb.append(b)
            if ok:
                total += ways(m - 1, u, tuple(nb))
        return total

    if n == 0:
        return 1 if all(r in (0, None) for r in targets) else 0
    return sum(ways(n - 1, u, targets) for u in range(n))


def count_by_rank_states(avoid: Iterable, contain, n: int) -> int:
    """Exact class count for type (2,1) patterns, polynomial in n.

    ``contain`` is a sequence of (pattern, r) pairs.  Works far past the
    brute-force cap; tests pin it to the exhaustive routes for n <= 9.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = query(avoid, contain, n)
    if not q.satisfiable:
        raise UnsatisfiableQueryError("pattern both avoided and contained")
    avoid_set, contain_t = q.effective()
    pats = sorted(avoid_set, key=str) + [t for t, _ in contain_t]
    targets = (0,) * len(avoid_set) + tuple(r for _, r in contain_t)
    profiles = tuple(_type21_profile(t) for t in pats)
    return _rank_state_table(profiles, targets, n)
